"""Gauss-code model of virtual link diagrams.

A diagram is an ordered tuple of components.  Each component is a cyclic
sequence of :class:`Pass` records, one per visit of the strand to a
classical crossing.  Virtual crossings leave no trace in the code.

Text format::

    diagram   := component ("/" component)*
    component := "@" | pass ("," pass)*
    pass      := ("O" | "U") [1-9][0-9]* ("+" | "-")

``@`` is a crossingless loop.  No whitespace is accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

OVER = "O"
UNDER = "U"

_ROLE_RANK = {OVER: 0, UNDER: 1}
_PASS_RE = re.compile(r"([OU])([1-9][0-9]*)([+-])")


class GaussCodeSyntaxError(ValueError):
    """Raised on malformed Gauss-code text.  ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class DiagramValidationError(ValueError):
    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True, order=True)
class Pass:
    crossing_id: int
    role: str
    sign: int

    def __post_init__(self):
        if self.role not in _ROLE_RANK:
            raise ValueError(f"role must be 'O' or 'U', got {self.role!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.crossing_id, int) or self.crossing_id < 1:
            raise ValueError(f"crossing id must be a positive int, got {self.crossing_id!r}")

    @property
    def is_over(self) -> bool:
        return self.role == OVER

    def sort_key(self) -> tuple[int, int, int]:
        return (_ROLE_RANK[self.role], self.crossing_id, 0 if self.sign > 0 else 1)

    def __str__(self) -> str:
        return f"{self.role}{self.crossing_id}{'+' if self.sign > 0 else '-'}"


def canonical_rotation(seq: Sequence, key=None) -> tuple:
    """Return the lexicographically least rotation of ``seq``."""
    seq = tuple(seq)
    if len(seq) < 2:
        return seq
    keyed = [key(x) for x in seq] if key is not None else list(seq)
    n = len(seq)
    best = min(range(n), key=lambda i: keyed[i:] + keyed[:i])
    return seq[best:] + seq[:best]


@dataclass(frozen=True)
class LinkDiagram:
    """Multi-component Gauss code.

    Components are stored in their canonical rotation, so two diagrams that
    differ only by where each cyclic sequence starts compare equal.
    Validity is not enforced here; see :func:`validate`.
    """

    components: tuple[tuple[Pass, ...], ...]

    def __post_init__(self):
        comps = tuple(canonical_rotation(c, key=Pass.sort_key) for c in self.components)
        if not comps:
            raise ValueError("a diagram needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_passes(cls, components: Iterable[Iterable[Pass]]) -> "LinkDiagram":
        return cls(tuple(tuple(c) for c in components))

    @property
    def n_components(self) -> int:
        return len(self.components)

    def crossing_ids(self) -> list[int]:
        return sorted({p.crossing_id for comp in self.components for p in comp})

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def passes(self):
        """Yield ``(component, index, pass)`` in serialization order."""
        for ci, comp in enumerate(self.components):
            for i, p in enumerate(comp):
                yield ci, i, p

    def locate(self) -> dict[int, dict[str, tuple[int, int]]]:
        """Map crossing id -> {"O": (comp, idx), "U": (comp, idx)}."""
        where: dict[int, dict[str, tuple[int, int]]] = {}
        for ci, i, p in self.passes():
            where.setdefault(p.crossing_id, {})[p.role] = (ci, i)
        return where

    def signs(self) -> dict[int, int]:
        return {p.crossing_id: p.sign for _, _, p in self.passes()}

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class Violation:
    kind: str  # duplicate-role | sign-mismatch | odd-occurrence
    crossing_id: int
    detail: str = ""

    def to_dict(self) -> dict:
        return {"violation": self.kind, "crossing_id": self.crossing_id, "detail": self.detail}

    def __str__(self) -> str:
        return f"{self.kind} on crossing {self.crossing_id}" + (f": {self.detail}" if self.detail else "")


def validate(d: LinkDiagram) -> Violation | None:
    """Return the first violated invariant, or None if ``d`` is valid.

    Crossings are checked in order of first appearance.
    """
    seen: dict[int, list[Pass]] = {}
    for _, _, p in d.passes():
        seen.setdefault(p.crossing_id, []).append(p)
    for cid, ps in seen.items():
        if len(ps) != 2:
            return Violation("odd-occurrence", cid, f"seen {len(ps)} time(s)")
        a, b = ps
        if a.role == b.role:
            return Violation("duplicate-role", cid, f"both passes are {a.role}")
        if a.sign != b.sign:
            return Violation("sign-mismatch", cid)
    return None


def check(d: LinkDiagram) -> LinkDiagram:
    v = validate(d)
    if v is not None:
        raise DiagramValidationError(v)
    return d


def parse_unchecked(text: str) -> LinkDiagram:
    """Parse without validating crossing invariants."""
    if not isinstance(text, str):
        raise TypeError("Gauss code must be a str")
    components = []
    pos = 0
    for chunk in text.split("/"):
        if chunk == "@":
            components.append(())
        else:
            passes = []
            col = pos
            for tok in chunk.split(","):
                m = _PASS_RE.fullmatch(tok)
                if m is None:
                    bad = _first_bad_column(tok)
                    raise GaussCodeSyntaxError(f"bad pass {tok!r}", col + bad + 1)
                role, cid, sign = m.groups()
                passes.append(Pass(int(cid), role, 1 if sign == "+" else -1))
                col += len(tok) + 1
            components.append(tuple(passes))
        pos += len(chunk) + 1
    return LinkDiagram(tuple(components))


def _first_bad_column(tok: str) -> int:
    # Offset (0-based) of the first character that cannot extend a valid pass.
    if not tok:
        return 0
    if tok[0] not in "OU":
        return 0
    i = 1
    if i >= len(tok) or tok[i] not in "123456789":
        return min(i, len(tok))
    while i < len(tok) and tok[i].isdigit() and tok[i].isascii():
        i += 1
    if i >= len(tok) or tok[i] not in "+-":
        return i
    return i + 1


def parse(text: str) -> LinkDiagram:
    """Parse and validate a Gauss code.

    >>> serialize(parse("U1+,O1+"))
    'O1+,U1+'
    """
    return check(parse_unchecked(text))


def serialize(d: LinkDiagram) -> str:
    return "/".join(",".join(map(str, comp)) if comp else "@" for comp in d.components)


@dataclass(frozen=True, eq=False)
class Universe:
    """Shadow of a diagram: crossing ids only, roles and signs erased.

    Equality ignores where each cyclic sequence starts.
    """

    components: tuple[tuple[int, ...], ...]
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "_key", tuple(canonical_rotation(c) for c in comps))

    def __eq__(self, other):
        if not isinstance(other, Universe):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def to_list(self) -> list[list[int]]:
        return [list(c) for c in self._key]


def universe(d: LinkDiagram) -> Universe:
    return Universe(tuple(tuple(p.crossing_id for p in comp) for comp in d.components))
