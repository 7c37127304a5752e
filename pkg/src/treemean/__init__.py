"""treemean: exact mean subtree order statistics of trees, the drop of the
mean under edge contraction, and exhaustive small-order verification
campaigns for the related inequalities.

All core arithmetic is exact: arbitrary-precision integers for subtree
counts and totals, rationals for every mean.  A compiled kernel extension
accelerates the corpus scans when available; the pure-Python twins give
identical results (see treemean._backend).
"""

__version__ = "0.1.0"

from ._backend import BACKEND as kernel_backend
from .contraction import (
    Coefficients,
    ContractionReport,
    ExtremalResult,
    Parts,
    TheoremScan,
    asymptotic_scan,
    assemble,
    coefficients,
    contraction_difference,
    d_excess,
    extremal_scan,
    mu_l,
    parts,
    verify_theorem,
)
from .errors import BudgetExceededError, TreeError, TreeFormatError
from .generate import (
    all_trees,
    bruteforce_classes,
    max_order,
    prufer_to_edges,
    random_tree,
)
from .inequalities import (
    InequalityId,
    InequalityScan,
    Margin,
    margin,
    margin_value,
    scan_corpus,
)
from .oracle import SubtreeProfile, connected_sets, enumerate_profile, oracle_stats
from .report import ViolationReport, emit_report, q_approx, q_str
from .stats import (
    MeanPropertyScan,
    SubtreeStats,
    attach_path_stats,
    extend_step,
    global_mean,
    local_mean,
    mean_without_vertex,
    scan_mean_properties,
    subtree_stats,
    union_step,
)
from .tree import (
    EdgeClass,
    InternalPathDecomposition,
    RootedTree,
    Tree,
    attach_path,
    canonical_code,
    canonical_string,
    classify_edge,
    contract_edge,
    format_tree,
    internal_path_of,
    make_family,
    parse_tree,
    rooted_code,
    trees_isomorphic,
    union_at_root,
)

__all__ = [
    "__version__",
    "kernel_backend",
    "BudgetExceededError",
    "TreeError",
    "TreeFormatError",
    "Tree",
    "RootedTree",
    "EdgeClass",
    "InternalPathDecomposition",
    "parse_tree",
    "format_tree",
    "contract_edge",
    "classify_edge",
    "internal_path_of",
    "union_at_root",
    "attach_path",
    "make_family",
    "rooted_code",
    "canonical_code",
    "canonical_string",
    "trees_isomorphic",
    "all_trees",
    "random_tree",
    "prufer_to_edges",
    "bruteforce_classes",
    "max_order",
    "SubtreeStats",
    "subtree_stats",
    "extend_step",
    "union_step",
    "attach_path_stats",
    "global_mean",
    "local_mean",
    "mean_without_vertex",
    "MeanPropertyScan",
    "scan_mean_properties",
    "SubtreeProfile",
    "connected_sets",
    "enumerate_profile",
    "oracle_stats",
    "InequalityId",
    "InequalityScan",
    "Margin",
    "margin",
    "margin_value",
    "scan_corpus",
    "Coefficients",
    "Parts",
    "ContractionReport",
    "TheoremScan",
    "ExtremalResult",
    "coefficients",
    "mu_l",
    "parts",
    "d_excess",
    "contraction_difference",
    "assemble",
    "verify_theorem",
    "extremal_scan",
    "asymptotic_scan",
    "ViolationReport",
    "emit_report",
    "q_str",
    "q_approx",
]
