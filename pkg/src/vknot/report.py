"""Combined invariant report for one diagram."""

from __future__ import annotations

from .diagram import LinkDiagram, serialize, universe
from .invariants import (
    classicality_certificate,
    homology_class,
    linking_matrix,
    pseudo_hopf_decomposition,
)
from .presentation import presentations
from .ribbon import surface_report


def build_report(d: LinkDiagram) -> dict:
    group, quandle = presentations(d)
    return {
        "code": serialize(d),
        "components": d.n_components,
        "crossings": d.n_crossings,
        "linking_matrix": linking_matrix(d).tolist(),
        "homology_class": homology_class(d).to_list(),
        "decomposition": pseudo_hopf_decomposition(d).to_dict(),
        "certificate": classicality_certificate(d).to_dict(),
        "surface": surface_report(d).to_dict(),
        "universe": universe(d).to_list(),
        "presentations": {"group": group.to_dict(), "quandle": quandle.to_dict()},
    }
