"""Laplacian spectral ratio toolkit.

Computes the ratio between the largest Laplacian eigenvalue and the
algebraic connectivity of a connected graph, evaluates the known lower
and upper bounds on that ratio, and scans tree orders for extremal
structures.
"""

from .bounds import BoundReport, all_bounds, tree_condition_checks
from .errors import (
    BadParamsError,
    BadPartitionError,
    BadSetsError,
    BudgetExceededError,
    DisconnectedError,
    DomainError,
    GraphInputError,
    InvalidShiftError,
    NoConvergenceError,
    NotATreeError,
    ParseError,
    SelfLoopError,
    SpectraError,
    VertexRangeError,
)
from .graphs import (
    Graph,
    broom_tree,
    build_graph,
    caterpillar_tree,
    complement,
    complete_graph,
    cycle_graph,
    family,
    graph6_decode,
    graph6_encode,
    metrics,
    parse_edge_list,
    path_graph,
    petersen_graph,
    read_graph_text,
    star_graph,
    t_star_tree,
)
from .intpoly import IntPolynomial, char_poly_exact, det_bareiss, real_roots
from .linalg import EigenDecomposition, jacobi_eigh, trace_stats
from .scan import (
    ScanRow,
    check_broom_maximum,
    check_star_path_extremes,
    conditional_sweep,
    scan_trees,
    verify_t_star,
    write_scan_csv,
)
from .spectral import (
    Spectrum,
    caterpillar_closed_form,
    kirchhoff_index,
    laplacian,
    laplacian_char_poly,
    path_ratio,
    spanning_tree_count,
    spectral_ratio,
    spectrum,
    star_ratio,
)
from .treegen import canonical_code, count_free_trees, enumerate_free_trees

__version__ = "0.1.0"

__all__ = [
    "BadParamsError",
    "BadPartitionError",
    "BadSetsError",
    "BoundReport",
    "BudgetExceededError",
    "DisconnectedError",
    "DomainError",
    "EigenDecomposition",
    "Graph",
    "GraphInputError",
    "IntPolynomial",
    "InvalidShiftError",
    "NoConvergenceError",
    "NotATreeError",
    "ParseError",
    "ScanRow",
    "SelfLoopError",
    "SpectraError",
    "Spectrum",
    "VertexRangeError",
    "all_bounds",
    "broom_tree",
    "build_graph",
    "canonical_code",
    "caterpillar_closed_form",
    "caterpillar_tree",
    "char_poly_exact",
    "check_broom_maximum",
    "check_star_path_extremes",
    "complement",
    "complete_graph",
    "conditional_sweep",
    "count_free_trees",
    "cycle_graph",
    "det_bareiss",
    "enumerate_free_trees",
    "family",
    "graph6_decode",
    "graph6_encode",
    "jacobi_eigh",
    "kirchhoff_index",
    "laplacian",
    "laplacian_char_poly",
    "metrics",
    "parse_edge_list",
    "path_graph",
    "path_ratio",
    "petersen_graph",
    "read_graph_text",
    "real_roots",
    "scan_trees",
    "spanning_tree_count",
    "spectral_ratio",
    "spectrum",
    "star_graph",
    "star_ratio",
    "t_star_tree",
    "trace_stats",
    "tree_condition_checks",
    "verify_t_star",
    "write_scan_csv",
]
