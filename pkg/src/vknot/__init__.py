"""Virtual link diagrams as Gauss codes: moves, surfaces and linking invariants."""

from .diagram import (
    DiagramValidationError,
    GaussCodeSyntaxError,
    LinkDiagram,
    Pass,
    Universe,
    Violation,
    parse,
    serialize,
    universe,
    validate,
)
from .invariants import (
    ClassicalityCertificate,
    HomologyClass,
    PseudoHopfDecomposition,
    classicality_certificate,
    compare_homology,
    homology_class,
    linking_matrix,
    linking_number,
    pseudo_hopf_decomposition,
    self_writhe,
)
from .moves import Move, StaleMoveError, apply_move, apply_shadow_move, enumerate_moves
from .presentation import Presentation, presentations
from .ribbon import (
    RibbonSurface,
    SurfaceReport,
    boundary_walk,
    build_ribbon,
    is_classically_realizable,
    surface_report,
)
from .search import (
    MoveSequence,
    SearchResult,
    canonical_key,
    ground_genus_upper_bound,
    search_equivalent,
)

__version__ = "0.1.0"
