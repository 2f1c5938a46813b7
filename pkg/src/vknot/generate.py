"""Random diagrams for property tests and benchmarks.

``random_diagram`` draws an arbitrary valid Gauss code (virtual in
general).  ``random_planar_diagram`` draws closed polygons in the plane,
intersects them, and reads off the Gauss code of the resulting classical
diagram with random over/under choices; crossing signs come from the
geometry.
"""

from __future__ import annotations

import numpy as np

from .diagram import OVER, UNDER, LinkDiagram, Pass


def random_diagram(
    rng: np.random.Generator,
    n_crossings: int,
    n_components: int = 1,
    allow_empty: bool = True,
) -> LinkDiagram:
    """Uniformly shuffled passes split into ``n_components`` cyclic sequences."""
    passes = []
    for cid in range(1, n_crossings + 1):
        s = int(rng.choice((1, -1)))
        passes += [Pass(cid, OVER, s), Pass(cid, UNDER, s)]
    order = rng.permutation(len(passes))
    passes = [passes[i] for i in order]
    total = len(passes)
    if n_components == 1:
        cuts = []
    elif allow_empty or total < n_components:
        cuts = sorted(rng.integers(0, total + 1, size=n_components - 1).tolist())
    else:
        cuts = sorted(rng.choice(np.arange(1, total), size=n_components - 1, replace=False).tolist())
    bounds = [0, *cuts, total]
    comps = [tuple(passes[bounds[i]:bounds[i + 1]]) for i in range(n_components)]
    return LinkDiagram(tuple(comps))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def random_planar_diagram(
    rng: np.random.Generator,
    n_components: int = 1,
    n_vertices: int = 5,
    scale: float = 1.0,
) -> LinkDiagram:
    """Gauss code of random closed polygons in the plane (a classical diagram)."""
    polys = []
    for _ in range(n_components):
        centre = rng.normal(scale=0.6 * scale, size=2)
        polys.append(centre + rng.normal(size=(n_vertices, 2)))
    segs = []  # (component, segment index, start, end)
    for ci, poly in enumerate(polys):
        for i in range(len(poly)):
            segs.append((ci, i, poly[i], poly[(i + 1) % len(poly)]))
    events = [[] for _ in polys]  # per component: (segment, t, crossing, is_over)
    signs = {}
    cid = 0
    for a in range(len(segs)):
        ca, ia, p, p2 = segs[a]
        for b in range(a + 1, len(segs)):
            cb, ib, q, q2 = segs[b]
            if ca == cb and (abs(ia - ib) <= 1 or abs(ia - ib) == len(polys[ca]) - 1):
                continue
            r, s = p2 - p, q2 - q
            den = _cross(r, s)
            if den == 0:
                continue
            t = _cross(q - p, s) / den
            u = _cross(q - p, r) / den
            if not (0 < t < 1 and 0 < u < 1):
                continue
            cid += 1
            a_over = bool(rng.integers(2))
            d_over, d_under = (r, s) if a_over else (s, r)
            signs[cid] = 1 if _cross(d_over, d_under) > 0 else -1
            events[ca].append((ia, t, cid, a_over))
            events[cb].append((ib, u, cid, not a_over))
    comps = []
    for evs in events:
        evs.sort()
        comps.append(tuple(Pass(c, OVER if over else UNDER, signs[c]) for _, _, c, over in evs))
    return LinkDiagram(tuple(comps))
