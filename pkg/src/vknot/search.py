"""Bounded move search: equivalence witnesses and a ground-genus upper bound.

Diagrams are compared up to rotation of each component and renaming of
crossing ids (component order is fixed).  The search is a bidirectional
breadth-first search over these classes.  It only ever explores diagrams
with at most ``max_crossings`` crossings and paths of at most
``max_steps`` moves, so "not found" is never a proof of inequivalence,
except when the off-diagonal linking matrices differ.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .diagram import LinkDiagram, serialize
from .invariants import homology_class
from .moves import (
    INVERSE,
    KINDS,
    Move,
    apply_code_move,
    apply_move,
    enumerate_code_moves,
    from_code,
    normalize,
    to_code,
)

FOUND = "found"
FRONTIER_EXHAUSTED = "frontier-exhausted"
BUDGET_EXHAUSTED = "budget-exhausted"


def canonical_keys(codes) -> list[bytes]:
    if not codes:
        return []
    flat, lens, starts = _kernels.pack(codes)
    canon = _kernels.canonical_batch(flat, lens, starts).astype(">i8")
    lens_be = lens.astype(">i8")
    ends = starts + lens.sum(axis=1)
    return [lens_be[i].tobytes() + canon[s:e].tobytes() for i, (s, e) in enumerate(zip(starts, ends))]


def canonical_key(d: LinkDiagram) -> bytes:
    """Hashable key equal for diagrams that differ only by rotation and relabelling."""
    return canonical_keys([to_code(d)])[0]


def genera(codes) -> np.ndarray:
    flat, lens, starts = _kernels.pack(codes)
    return _kernels.genus_batch(flat, lens, starts)


@dataclass(frozen=True)
class MoveSequence:
    """Moves from ``start``; each step records the serialized result."""

    start: LinkDiagram
    steps: tuple[tuple[Move, str], ...]

    def __len__(self):
        return len(self.steps)

    def replay(self) -> LinkDiagram:
        """Re-apply every move, checking each recorded result; returns the end diagram."""
        d = self.start
        for i, (m, expected) in enumerate(self.steps):
            d = apply_move(d, m)
            got = serialize(d)
            if got != expected:
                raise AssertionError(f"step {i}: replay gave {got}, recorded {expected}")
        return d

    def to_jsonl(self) -> str:
        lines = []
        for m, result in self.steps:
            rec = m.to_dict()
            rec["result"] = result
            lines.append(json.dumps(rec))
        return "".join(line + "\n" for line in lines)


@dataclass(frozen=True)
class SearchResult:
    status: str
    sequence: MoveSequence | None = None
    nodes: int = 0
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Budget:
    def __init__(self, max_nodes, time_limit):
        self.max_nodes = max_nodes
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0

    def spent(self) -> bool:
        if self.max_nodes is not None and self.nodes >= self.max_nodes:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


def _expand(code, max_crossings):
    moves = enumerate_code_moves(code, KINDS, max_crossings=max_crossings)
    results = [apply_code_move(code, m, check=False) for m in moves]
    return moves, results, canonical_keys(results)


def _validate_bounds(max_crossings, max_steps):
    for name, v in (("max_crossings", max_crossings), ("max_steps", max_steps)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a non-negative int")


def search_equivalent(
    a: LinkDiagram,
    b: LinkDiagram,
    max_crossings: int,
    max_steps: int,
    max_nodes: int | None = None,
    time_limit: float | None = None,
) -> SearchResult:
    """Look for a Reidemeister move sequence from ``a`` to ``b`` within bounds.

    Layers are expanded from whichever side has the smaller frontier; each
    frontier is processed in key order, and the first meeting found in
    that order is returned.  The witness is replayed before returning.
    """
    _validate_bounds(max_crossings, max_steps)
    if a.n_components != b.n_components:
        return SearchResult(FRONTIER_EXHAUSTED, reason="component counts differ")
    if homology_class(a) != homology_class(b):
        return SearchResult(FRONTIER_EXHAUSTED, reason="off-diagonal linking matrices differ")

    ca, cb = to_code(a), to_code(b)
    ka, kb = canonical_keys([ca, cb])
    if ka == kb:
        return SearchResult(FOUND, MoveSequence(a, ()), nodes=1)
    if a.n_crossings > max_crossings or b.n_crossings > max_crossings:
        return SearchResult(FRONTIER_EXHAUSTED, reason="endpoint exceeds max_crossings")

    budget = _Budget(max_nodes, time_limit)
    # key -> (code, parent key, move from parent)
    seen = ({ka: (ca, None, None)}, {kb: (cb, None, None)})
    frontier = [[ka], [kb]]
    depth = [0, 0]
    budget.nodes = 2
    while depth[0] + depth[1] < max_steps:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        if not frontier[side]:
            return SearchResult(FRONTIER_EXHAUSTED, nodes=budget.nodes, reason="frontier empty")
        mine, other = seen[side], seen[1 - side]
        nxt = []
        for key in sorted(frontier[side]):
            if budget.spent():
                return SearchResult(BUDGET_EXHAUSTED, nodes=budget.nodes)
            code = mine[key][0]
            moves, results, keys = _expand(code, max_crossings)
            for m, r, k in zip(moves, results, keys):
                if k in mine:
                    continue
                if k in other:
                    mine[k] = (normalize(r), key, m)
                    seq = _witness(a, seen, k)
                    return SearchResult(FOUND, seq, nodes=budget.nodes)
                mine[k] = (normalize(r), key, m)
                nxt.append(k)
                budget.nodes += 1
        frontier[side] = nxt
        depth[side] += 1
    return SearchResult(FRONTIER_EXHAUSTED, nodes=budget.nodes, reason="step bound reached")


def _chain(table, key):
    # moves from the root of ``table`` to ``key``
    out = []
    while True:
        _, parent, m = table[key]
        if parent is None:
            return list(reversed(out))
        out.append((parent, m, key))
        key = parent


def _witness(a: LinkDiagram, seen, meet) -> MoveSequence:
    fwd, bwd = seen
    forward = _chain(fwd, meet)
    backward = _chain(bwd, meet)
    steps = []
    d = a
    for _, m, _ in forward:
        d = apply_move(d, m)
        steps.append((m, serialize(d)))
    # walk back toward b, inverting each b-side move on the current diagram
    for parent, m, _ in reversed(backward):
        code = to_code(d)
        target = parent
        for cand in enumerate_code_moves(code, (INVERSE[m.kind],)):
            r = apply_code_move(code, cand, check=False)
            if canonical_keys([r])[0] == target:
                d = apply_move(d, cand)
                steps.append((cand, serialize(d)))
                break
        else:
            raise RuntimeError(f"no inverse of {m.kind} found while rebuilding the witness")
    seq = MoveSequence(a, tuple(steps))
    end = seq.replay()
    root_b = next(k for k, v in bwd.items() if v[1] is None)
    if canonical_key(end) != root_b:
        raise RuntimeError("witness does not end at the target")
    return seq


def ground_genus_search(d: LinkDiagram, max_crossings: int, max_steps: int):
    """Least canonical genus within bounds, with a diagram attaining it."""
    _validate_bounds(max_crossings, max_steps)
    code = to_code(d)
    best = int(genera([code])[0])
    best_code = code
    seen = {canonical_keys([code])[0]: code}
    frontier = list(seen)
    for _ in range(max_steps):
        if best == 0 or not frontier:
            break
        nxt = []
        for key in sorted(frontier):
            moves, results, keys = _expand(seen[key], max_crossings)
            fresh = []
            for r, k in zip(results, keys):
                if k not in seen:
                    seen[k] = normalize(r)
                    fresh.append(k)
            if fresh:
                g = genera([seen[k] for k in fresh])
                i = int(np.argmin(g))
                if g[i] < best:
                    best, best_code = int(g[i]), seen[fresh[i]]
            nxt.extend(fresh)
            if best == 0:
                break
        frontier = nxt
    return best, from_code(best_code)


def ground_genus_upper_bound(d: LinkDiagram, max_crossings: int, max_steps: int) -> int:
    """Upper bound for the ground genus: least canonical genus found nearby."""
    return ground_genus_search(d, max_crossings, max_steps)[0]
