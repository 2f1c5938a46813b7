"""Disk-band surfaces of Gauss codes.

Every crossing becomes a disk with four slots, every arc between
consecutive passes becomes a band, and every crossingless component an
annulus.  The counterclockwise slot order at a disk is::

    positive crossing: over-in, under-in, over-out, under-out
    negative crossing: over-in, under-out, over-out, under-in

Boundary circles are traced by leaving a slot along its band and, at the
far disk, turning to the next slot in counterclockwise order.  Capping
each boundary circle with a disk gives a closed surface per connected
piece, with genus ``(2 - chi - b) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram

OVER_IN, UNDER_IN, OVER_OUT, UNDER_OUT = "oi", "ui", "oo", "uo"

_POSITIVE = (OVER_IN, UNDER_IN, OVER_OUT, UNDER_OUT)
_NEGATIVE = (OVER_IN, UNDER_OUT, OVER_OUT, UNDER_IN)


@dataclass(frozen=True)
class RibbonSurface:
    """Combinatorial disk-band surface.

    ``disks`` maps each crossing id (in ascending order) to its slots in
    counterclockwise order.  ``bands[i]`` joins ``(crossing, out-slot)`` to
    ``(crossing, in-slot)``.  ``band_component[i]`` is the component the
    band runs along.
    """

    disks: tuple[tuple[int, tuple[str, str, str, str]], ...]
    bands: tuple[tuple[tuple[int, str], tuple[int, str]], ...]
    band_component: tuple[int, ...]
    annuli: tuple[int, ...]  # component indices of crossingless loops

    @property
    def euler_characteristic(self) -> int:
        return len(self.disks) - len(self.bands)


@dataclass(frozen=True)
class BoundaryCircle:
    """One boundary circle: band sides ``(band, end)`` in walk order.

    Side ``(i, 0)`` runs from the first end of band ``i`` to its second,
    ``(i, 1)`` back.  The two circles of an annulus have no band sides and
    carry the component index instead.
    """

    sides: tuple[tuple[int, int], ...] = ()
    annulus: int | None = None


@dataclass(frozen=True)
class Piece:
    components: tuple[int, ...]
    euler_characteristic: int
    boundary_components: int
    genus: int

    def to_dict(self) -> dict:
        return {
            "components": [c + 1 for c in self.components],
            "chi": self.euler_characteristic,
            "boundary": self.boundary_components,
            "genus": self.genus,
        }


@dataclass(frozen=True)
class SurfaceReport:
    euler_characteristic: int
    boundary_components: int
    canonical_genus: int
    pieces: tuple[Piece, ...]

    @property
    def connected_pieces(self) -> int:
        return len(self.pieces)

    def to_dict(self) -> dict:
        return {
            "chi": self.euler_characteristic,
            "boundary": self.boundary_components,
            "genus": self.canonical_genus,
            "pieces": [p.to_dict() for p in self.pieces],
        }


def build_ribbon(d: LinkDiagram) -> RibbonSurface:
    signs = d.signs()
    disks = tuple((cid, _POSITIVE if signs[cid] > 0 else _NEGATIVE) for cid in sorted(signs))
    bands, owner, annuli = [], [], []
    for ci, comp in enumerate(d.components):
        if not comp:
            annuli.append(ci)
            continue
        n = len(comp)
        for i, p in enumerate(comp):
            q = comp[(i + 1) % n]
            out_slot = OVER_OUT if p.is_over else UNDER_OUT
            in_slot = OVER_IN if q.is_over else UNDER_IN
            bands.append(((p.crossing_id, out_slot), (q.crossing_id, in_slot)))
            owner.append(ci)
    return RibbonSurface(disks, tuple(bands), tuple(owner), tuple(annuli))


def _darts(s: RibbonSurface):
    # dart = (band, end); slot_of maps darts to slots and back
    slot_of = {}
    dart_at = {}
    for i, (a, b) in enumerate(s.bands):
        slot_of[(i, 0)] = a
        slot_of[(i, 1)] = b
        dart_at[a] = (i, 0)
        dart_at[b] = (i, 1)
    return slot_of, dart_at


def boundary_walk(s: RibbonSurface) -> list[BoundaryCircle]:
    rotation = dict(s.disks)
    slot_of, dart_at = _darts(s)
    circles = []
    seen = set()
    for start in sorted(slot_of):
        if start in seen:
            continue
        sides = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            sides.append(dart)
            band, end = dart
            cid, name = slot_of[(band, 1 - end)]
            order = rotation[cid]
            nxt = order[(order.index(name) + 1) % 4]
            dart = dart_at[(cid, nxt)]
        circles.append(BoundaryCircle(tuple(sides)))
    for ci in s.annuli:
        circles.extend((BoundaryCircle(annulus=ci), BoundaryCircle(annulus=ci)))
    return circles


def _pieces(s: RibbonSurface) -> list[set[int]]:
    # connected pieces as sets of component indices
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    crossing_comp: dict[int, int] = {}
    for (a, _), comp in zip(s.bands, s.band_component):
        find(comp)
        if a[0] in crossing_comp:
            parent[find(comp)] = find(crossing_comp[a[0]])
        else:
            crossing_comp[a[0]] = comp
    for ci in s.annuli:
        find(ci)
    groups: dict[int, set[int]] = {}
    for x in list(parent):
        groups.setdefault(find(x), set()).add(x)
    return sorted(groups.values(), key=min)


def surface_report_of(s: RibbonSurface) -> SurfaceReport:
    circles = boundary_walk(s)
    comp_of_band = s.band_component
    pieces = []
    for members in _pieces(s):
        crossings = {
            end[0]
            for band, comp in zip(s.bands, comp_of_band)
            if comp in members
            for end in band
        }
        n_bands = sum(1 for comp in comp_of_band if comp in members)
        chi = len(crossings) - n_bands
        b = sum(
            1
            for c in circles
            if (c.annulus in members if c.annulus is not None else comp_of_band[c.sides[0][0]] in members)
        )
        twice_genus = 2 - chi - b
        assert twice_genus >= 0 and twice_genus % 2 == 0, (chi, b)
        pieces.append(Piece(tuple(sorted(members)), chi, b, twice_genus // 2))
    return SurfaceReport(
        euler_characteristic=s.euler_characteristic,
        boundary_components=len(circles),
        canonical_genus=sum(p.genus for p in pieces),
        pieces=tuple(pieces),
    )


def surface_report(d: LinkDiagram) -> SurfaceReport:
    return surface_report_of(build_ribbon(d))


def is_classically_realizable(d: LinkDiagram) -> bool:
    """True iff every connected piece caps off to a sphere."""
    return all(p.genus == 0 for p in surface_report(d).pieces)
