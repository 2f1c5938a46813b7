"""Reidemeister moves as rewriting rules on Gauss codes.

Moves act on an integer *code*: a tuple of components, each a tuple of
tokens ``role << 32 | crossing_id << 1 | sign_bit`` (role 0 = over,
sign bit 0 = positive).  Numeric token order is the (role, id, sign)
order used for canonical rotations, so positions in a code line up with
positions in the matching :class:`LinkDiagram`.

Sites are ``(component, index)`` pairs.  For the add-moves they are gaps:
gap ``g`` of a component sits just before index ``g``; a crossingless
component has the single gap 0.

Virtual moves do not change a Gauss code and have no representation here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .diagram import OVER, LinkDiagram, Pass, Universe, canonical_rotation

R1_ADD = "R1_add"
R1_REMOVE = "R1_remove"
R2_ADD = "R2_add"
R2_REMOVE = "R2_remove"
R3 = "R3"

KINDS = (R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3)
_KIND_RANK = {k: i for i, k in enumerate(KINDS)}
INVERSE = {R1_ADD: R1_REMOVE, R1_REMOVE: R1_ADD, R2_ADD: R2_REMOVE, R2_REMOVE: R2_ADD, R3: R3}

_ROLE_SHIFT = 32
_ID_MASK = (1 << 31) - 1


class StaleMoveError(ValueError):
    """The move's site does not match the diagram it is applied to."""


# -- token helpers ----------------------------------------------------------

def tok(cid: int, over: bool, sign: int) -> int:
    return ((0 if over else 1) << _ROLE_SHIFT) | (cid << 1) | (0 if sign > 0 else 1)


def tok_id(t: int) -> int:
    return (t >> 1) & _ID_MASK


def tok_over(t: int) -> bool:
    return not (t >> _ROLE_SHIFT)


def tok_sign(t: int) -> int:
    return -1 if t & 1 else 1


def to_code(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(tok(p.crossing_id, p.is_over, p.sign) for p in comp) for comp in d.components)


def from_code(code) -> LinkDiagram:
    return LinkDiagram(
        tuple(
            tuple(Pass(tok_id(t), "O" if tok_over(t) else "U", tok_sign(t)) for t in comp)
            for comp in code
        )
    )


def normalize(code) -> tuple[tuple[int, ...], ...]:
    return tuple(canonical_rotation(c) for c in code)


def max_id(code) -> int:
    return max((tok_id(t) for comp in code for t in comp), default=0)


# -- R3 catalog -------------------------------------------------------------

@lru_cache(maxsize=None)
def r3_catalog() -> frozenset:
    """Realizable (top, middle, bottom, signs) patterns, loaded from package data."""
    raw = json.loads(resources.files("vknot").joinpath("data/r3_catalog.json").read_text())
    return frozenset(
        (t["top"], t["middle"], t["bottom"], tuple(t["signs"])) for t in raw["templates"]
    )


# -- moves ------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """A Reidemeister move at a site.

    ``sign``/``order`` parametrize R1_add (order "OU" or "UO").  R2_add
    uses ``over`` (0: the first gap of the site carries the over strand,
    1: the second), ``parallel`` (relative strand orientation) and
    ``sign`` (sign of the first crossing met along the over strand).
    """

    kind: str
    site: tuple[tuple[int, int], ...]
    sign: int | None = None
    order: str | None = None
    over: int | None = None
    parallel: bool | None = None

    def sort_key(self):
        return (
            _KIND_RANK[self.kind],
            self.site,
            self.sign or 0,
            self.order or "",
            -1 if self.over is None else self.over,
            -1 if self.parallel is None else int(self.parallel),
        )

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "site": [list(s) for s in self.site]}
        for name in ("sign", "order", "over", "parallel"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Move":
        return cls(
            kind=data["kind"],
            site=tuple(tuple(s) for s in data["site"]),
            sign=data.get("sign"),
            order=data.get("order"),
            over=data.get("over"),
            parallel=data.get("parallel"),
        )


def _locate(code) -> dict[int, list]:
    # id -> [over position, under position]
    where: dict[int, list] = {}
    for ci, comp in enumerate(code):
        for i, t in enumerate(comp):
            slot = where.setdefault(tok_id(t), [None, None])
            slot[0 if tok_over(t) else 1] = (ci, i)
    return where


def _next(code, pos):
    c, i = pos
    return (c, (i + 1) % len(code[c]))


def _prev(code, pos):
    c, i = pos
    return (c, (i - 1) % len(code[c]))


def _adjacent(code, p, q) -> bool:
    return p != q and _next(code, p) == q


def _at(code, pos) -> int:
    return code[pos[0]][pos[1]]


def _gaps(code):
    return [(c, g) for c, comp in enumerate(code) for g in range(max(len(comp), 1))]


# -- enumeration ------------------------------------------------------------

def _enum_r1_remove(code):
    out = []
    for c, comp in enumerate(code):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n if n > 2 else 1):
            j = (i + 1) % n
            if tok_id(comp[i]) == tok_id(comp[j]):
                out.append(Move(R1_REMOVE, ((c, i), (c, j))))
    return out


def _r2_remove_site(code, where, p, q):
    a, b = _at(code, p), _at(code, q)
    if not (tok_over(a) and tok_over(b)):
        return None
    ia, ib = tok_id(a), tok_id(b)
    if ia == ib or tok_sign(a) == tok_sign(b):
        return None
    ua, ub = where[ia][1], where[ib][1]
    if _adjacent(code, ua, ub):
        return (p, q, ua, ub)
    if _adjacent(code, ub, ua):
        return (p, q, ub, ua)
    return None


def _enum_r2_remove(code, where):
    out, seen = [], set()
    for c, comp in enumerate(code):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n if n > 2 else 1):
            p, q = (c, i), (c, (i + 1) % n)
            site = _r2_remove_site(code, where, p, q)
            if site is None:
                continue
            key = frozenset((tok_id(_at(code, p)), tok_id(_at(code, q))))
            if key not in seen:
                seen.add(key)
                out.append(Move(R2_REMOVE, site))
    return out


def _r3_pattern(code, site):
    """Return the catalog pattern read off a 6-position site, or None.

    Site order: top pair, middle pair, bottom pair, each in strand order.
    """
    t1, t2, m1, m2, b1, b2 = site
    for p, q in ((t1, t2), (m1, m2), (b1, b2)):
        if not _adjacent(code, p, q):
            return None
    T = (_at(code, t1), _at(code, t2))
    M = (_at(code, m1), _at(code, m2))
    B = (_at(code, b1), _at(code, b2))
    if not (tok_over(T[0]) and tok_over(T[1])):
        return None
    if tok_over(B[0]) or tok_over(B[1]):
        return None
    if tok_over(M[0]) == tok_over(M[1]):
        return None
    m_under, m_over = (M[0], M[1]) if not tok_over(M[0]) else (M[1], M[0])
    x, z = tok_id(m_under), tok_id(m_over)
    tids = (tok_id(T[0]), tok_id(T[1]))
    if x not in tids:
        return None
    y = tids[1] if tids[0] == x else tids[0]
    if {tok_id(B[0]), tok_id(B[1])} != {y, z} or len({x, y, z}) != 3:
        return None
    top = "xy" if tids[0] == x else "yx"
    mid = "xz" if tok_id(M[0]) == x else "zx"
    bot = "yz" if tok_id(B[0]) == y else "zy"
    signs = (tok_sign(m_under), tok_sign(T[0] if tids[0] == y else T[1]), tok_sign(m_over))
    pat = (top, mid, bot, signs)
    return pat if pat in r3_catalog() else None


def _enum_r3(code, where):
    out, seen = [], set()
    for c, comp in enumerate(code):
        n = len(comp)
        if n < 2:
            continue
        for i in range(n):
            t1, t2 = (c, i), (c, (i + 1) % n)
            a, b = _at(code, t1), _at(code, t2)
            if not (tok_over(a) and tok_over(b)) or tok_id(a) == tok_id(b):
                continue
            for x, y in ((tok_id(a), tok_id(b)), (tok_id(b), tok_id(a))):
                ux, uy = where[x][1], where[y][1]
                for oz in (_next(code, ux), _prev(code, ux)):
                    tz = _at(code, oz)
                    z = tok_id(tz)
                    if not tok_over(tz) or z in (x, y):
                        continue
                    uz = where[z][1]
                    if uz not in (_next(code, uy), _prev(code, uy)):
                        continue
                    key = frozenset((x, y, z))
                    if key in seen:
                        continue
                    for m in ((ux, oz), (oz, ux)):
                        if not _adjacent(code, *m):
                            continue
                        for bb in ((uy, uz), (uz, uy)):
                            if not _adjacent(code, *bb):
                                continue
                            site = (t1, t2) + m + bb
                            if key not in seen and _r3_pattern(code, site) is not None:
                                seen.add(key)
                                out.append(Move(R3, site))
    return out


def _enum_r1_add(code):
    return [
        Move(R1_ADD, (g,), sign=s, order=o)
        for g in _gaps(code)
        for s in (1, -1)
        for o in ("OU", "UO")
    ]


def _enum_r2_add(code):
    gaps = _gaps(code)
    out = []
    for i, g1 in enumerate(gaps):
        for g2 in gaps[i:]:
            for over in (0, 1):
                for parallel in (True, False):
                    for s in (1, -1):
                        out.append(Move(R2_ADD, (g1, g2), sign=s, over=over, parallel=parallel))
    return out


def enumerate_code_moves(code, kinds: Iterable[str] = KINDS, max_crossings: int | None = None):
    kinds = set(kinds)
    unknown = kinds - set(KINDS)
    if unknown:
        raise ValueError(f"unknown move kinds: {sorted(unknown)}")
    n_cross = sum(len(c) for c in code) // 2
    where = _locate(code) if kinds & {R2_REMOVE, R3} else None
    out = []
    if R1_ADD in kinds and (max_crossings is None or n_cross + 1 <= max_crossings):
        out += _enum_r1_add(code)
    if R1_REMOVE in kinds:
        out += _enum_r1_remove(code)
    if R2_ADD in kinds and (max_crossings is None or n_cross + 2 <= max_crossings):
        out += _enum_r2_add(code)
    if R2_REMOVE in kinds:
        out += _enum_r2_remove(code, where)
    if R3 in kinds:
        out += _enum_r3(code, where)
    out.sort(key=Move.sort_key)
    return out


def enumerate_moves(d: LinkDiagram, kinds: Iterable[str] = KINDS) -> list[Move]:
    """All applicable moves of the requested kinds, sorted by kind then site."""
    return enumerate_code_moves(to_code(d), kinds)


# -- positional primitives (shared by diagrams and universes) --------------

def _delete(comps, positions):
    drop = set(positions)
    return tuple(
        tuple(t for i, t in enumerate(comp) if (c, i) not in drop) for c, comp in enumerate(comps)
    )


def _insert(comps, inserts: dict):
    # inserts: (c, gap) -> list of tokens, placed just before index gap
    out = []
    for c, comp in enumerate(comps):
        if not any(k[0] == c for k in inserts):
            out.append(comp)
            continue
        new = []
        for i, t in enumerate(comp):
            new.extend(inserts.get((c, i), ()))
            new.append(t)
        if not comp:
            new.extend(inserts.get((c, 0), ()))
        out.append(tuple(new))
    return tuple(out)


def _swap(comps, pairs):
    lists = [list(c) for c in comps]
    for (c1, i1), (c2, i2) in pairs:
        lists[c1][i1], lists[c2][i2] = lists[c2][i2], lists[c1][i1]
    return tuple(tuple(c) for c in lists)


def _check_gaps(code, gaps):
    for c, g in gaps:
        if not (0 <= c < len(code)) or not (0 <= g < max(len(code[c]), 1)):
            raise StaleMoveError(f"gap {(c, g)} out of range")


def _check_positions(code, positions):
    for c, i in positions:
        if not (0 <= c < len(code)) or not (0 <= i < len(code[c])):
            raise StaleMoveError(f"position {(c, i)} out of range")


def _r2_add_inserts(m: Move, a: int, b: int, make):
    """Token lists per gap for an R2_add creating crossings a (first) and b."""
    g_over, g_under = (m.site[0], m.site[1]) if m.over == 0 else (m.site[1], m.site[0])
    over = [make(a, True, m.sign), make(b, True, -m.sign)]
    under_order = (a, b) if m.parallel else (b, a)
    signs = {a: m.sign, b: -m.sign}
    under = [make(i, False, signs[i]) for i in under_order]
    if g_over == g_under:
        first, second = (over, under) if m.over == 0 else (under, over)
        return {g_over: first + second}
    return {g_over: over, g_under: under}


def apply_code_move(code, m: Move, *, check: bool = True):
    """Apply ``m`` to a code; returns a code (not rotation-normalized)."""
    k = m.kind
    if k == R1_REMOVE:
        if check:
            _check_positions(code, m.site)
            p, q = m.site
            if not _adjacent(code, p, q) or tok_id(_at(code, p)) != tok_id(_at(code, q)):
                raise StaleMoveError("R1_remove site is not a kink")
        return _delete(code, m.site)
    if k == R2_REMOVE:
        if check:
            _check_positions(code, m.site)
            p, q, u1, u2 = m.site
            if _r2_remove_site(code, _locate(code), p, q) not in ((p, q, u1, u2),):
                raise StaleMoveError("R2_remove site is not a cancelling bigon")
        return _delete(code, m.site)
    if k == R3:
        if check:
            _check_positions(code, m.site)
            if _r3_pattern(code, m.site) is None:
                raise StaleMoveError("R3 site matches no catalog template")
        s = m.site
        return _swap(code, [(s[0], s[1]), (s[2], s[3]), (s[4], s[5])])
    if k == R1_ADD:
        if check:
            _check_gaps(code, m.site)
            if m.sign not in (1, -1) or m.order not in ("OU", "UO"):
                raise StaleMoveError("bad R1_add parameters")
        cid = max_id(code) + 1
        first_over = m.order == "OU"
        toks = [tok(cid, first_over, m.sign), tok(cid, not first_over, m.sign)]
        return _insert(code, {m.site[0]: toks})
    if k == R2_ADD:
        if check:
            _check_gaps(code, m.site)
            if m.sign not in (1, -1) or m.over not in (0, 1) or m.parallel not in (True, False):
                raise StaleMoveError("bad R2_add parameters")
        a = max_id(code) + 1
        return _insert(code, _r2_add_inserts(m, a, a + 1, tok))
    raise ValueError(f"unknown move kind {k!r}")


def apply_move(d: LinkDiagram, m: Move) -> LinkDiagram:
    """Apply a move; raises :class:`StaleMoveError` if the site does not fit ``d``."""
    return from_code(apply_code_move(to_code(d), m))


def apply_shadow_move(u: Universe, m: Move) -> Universe:
    """Apply the shadow of ``m`` to a universe whose components are in diagram order."""
    comps = u.components
    if m.kind in (R1_REMOVE, R2_REMOVE):
        return Universe(_delete(comps, m.site))
    if m.kind == R3:
        s = m.site
        return Universe(_swap(comps, [(s[0], s[1]), (s[2], s[3]), (s[4], s[5])]))
    cid = max((i for c in comps for i in c), default=0) + 1
    if m.kind == R1_ADD:
        return Universe(_insert(comps, {m.site[0]: [cid, cid]}))
    if m.kind == R2_ADD:
        return Universe(_insert(comps, _r2_add_inserts(m, cid, cid + 1, lambda i, _o, _s: i)))
    raise ValueError(f"unknown move kind {m.kind!r}")
