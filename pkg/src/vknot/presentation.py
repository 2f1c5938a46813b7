"""Wirtinger-style group and quandle presentations read off a Gauss code.

Arcs run from one under-pass to the next along a component; a component
with no under-pass is a single arc.  Hence::

    #generators = #crossings + #(components without an under-pass)
    #relations  = #crossings

Group relators are words equal to the identity.  At a positive crossing
with over-arc ``b``, incoming under-arc ``a`` and outgoing under-arc ``c``
the relator is ``b a b^-1 c^-1`` (that is ``c = b a b^-1``); at a negative
crossing it is ``b^-1 a b c^-1``.

Quandle relations are triples ``(x, y, z)`` read as ``x |> y = z``.  A
positive crossing gives ``(a, b, c)``.  A negative crossing has
``c = a |>^-1 b``, which is recorded as ``(c, b, a)``.

Nothing is simplified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import OVER, UNDER, LinkDiagram


@dataclass(frozen=True)
class Presentation:
    kind: str  # "group" | "quandle"
    generators: tuple[str, ...]
    relations: tuple[tuple, ...]

    def to_dict(self) -> dict:
        if self.kind == "group":
            rels = [[[g, e] for g, e in word] for word in self.relations]
        else:
            rels = [list(t) for t in self.relations]
        return {"kind": self.kind, "generators": list(self.generators), "relations": rels}


def arc_labels(d: LinkDiagram) -> tuple[list[str], dict[tuple[int, int], str], dict[tuple[int, int], str]]:
    """Return (generators, arc_at, arc_after).

    ``arc_at[(c, i)]`` is the arc carrying pass ``i`` of component ``c``;
    for an under-pass this is the incoming arc.  ``arc_after[(c, i)]`` is
    the outgoing arc at an under-pass.
    """
    generators: list[str] = []
    arc_at: dict[tuple[int, int], str] = {}
    arc_after: dict[tuple[int, int], str] = {}
    for ci, comp in enumerate(d.components):
        unders = [i for i, p in enumerate(comp) if not p.is_over]
        if not unders:
            name = f"a{len(generators) + 1}"
            generators.append(name)
            for i in range(len(comp)):
                arc_at[(ci, i)] = name
            continue
        names = [f"a{len(generators) + t + 1}" for t in range(len(unders))]
        generators.extend(names)
        n = len(comp)
        for t, u in enumerate(unders):
            # arc t leaves under-pass u and ends at the next under-pass
            name = names[t]
            arc_after[(ci, u)] = name
            i = (u + 1) % n
            while True:
                arc_at[(ci, i)] = name
                if not comp[i].is_over:
                    break
                i = (i + 1) % n
    return generators, arc_at, arc_after


def presentations(d: LinkDiagram) -> tuple[Presentation, Presentation]:
    generators, arc_at, arc_after = arc_labels(d)
    where = d.locate()
    group, quandle = [], []
    for cid in sorted(where):
        over, under = where[cid][OVER], where[cid][UNDER]
        b = arc_at[over]
        a = arc_at[under]
        c = arc_after[under]
        sign = d.components[over[0]][over[1]].sign
        if sign > 0:
            group.append(((b, 1), (a, 1), (b, -1), (c, -1)))
            quandle.append((a, b, c))
        else:
            group.append(((b, -1), (a, 1), (b, 1), (c, -1)))
            quandle.append((c, b, a))
    gens = tuple(generators)
    return Presentation("group", gens, tuple(group)), Presentation("quandle", gens, tuple(quandle))

