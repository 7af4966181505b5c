"""Exact enumeration of generalized vertex colorings on small trees.

Builds trees on up to 16 vertices, enumerates all free trees per vertex
count, counts valid colorings for eight coloring rules (proper,
conflict-free, odd, star-rainbow, non-monochromatic, k-strong-conflict-free,
star, and loop-homomorphism colorings) both by pruned brute force and by
closed forms, and verifies which trees attain the extreme counts by
exhaustive census.
"""

from ._backend import backend_name, kernel_loaded
from .counting import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    brute_count,
    closed_count,
    has_closed_form,
    path_count,
    proper_count,
    sr_count_product,
    star_count,
)
from .extremal import (
    CensusRecord,
    ExploreResult,
    ExtremalReport,
    THEOREM_IDS,
    VerificationReport,
    census,
    explore_max,
    extremal_report,
    has_exposed_subtree,
    verify_theorem,
)
from .schemes import (
    CF,
    NM,
    ODD,
    PROPER,
    SR,
    STAR,
    XHOM,
    Coloring,
    Scheme,
    closed_neighborhood_colors,
    four_paths,
    is_valid,
    kscf,
)
from .trees import (
    CanonicalCode,
    DegreeProfile,
    Tree,
    TreeError,
    canonical_code,
    centers,
    degree_profile,
    double_star,
    enumerate_free_trees,
    from_edge_list,
    from_pruefer,
    parse_tree_spec,
    path,
    pruefer_code_census,
    star,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CF",
    "CanonicalCode",
    "CensusRecord",
    "Coloring",
    "DEFAULT_BUDGET",
    "DegreeProfile",
    "ExploreResult",
    "ExtremalReport",
    "NM",
    "ODD",
    "PROPER",
    "SR",
    "STAR",
    "Scheme",
    "THEOREM_IDS",
    "Tree",
    "TreeError",
    "VerificationReport",
    "XHOM",
    "backend_name",
    "brute_count",
    "canonical_code",
    "census",
    "centers",
    "closed_count",
    "closed_neighborhood_colors",
    "degree_profile",
    "double_star",
    "enumerate_free_trees",
    "explore_max",
    "extremal_report",
    "four_paths",
    "from_edge_list",
    "from_pruefer",
    "has_closed_form",
    "has_exposed_subtree",
    "is_valid",
    "kernel_loaded",
    "kscf",
    "parse_tree_spec",
    "path",
    "path_count",
    "proper_count",
    "pruefer_code_census",
    "sr_count_product",
    "star",
    "star_count",
    "verify_theorem",
]
