"""Exact counting, search, and verification for proper colorings of full
m-fold covers (DP-colorings) of small graphs."""

from .constructions import (
    all_negative_signing,
    even_pairing_cover,
    odd_complete_cover,
    odd_derangement,
    odd_k4_cover,
)
from .counting import (
    ColorSetSpec,
    CountResult,
    chromatic_whitney,
    count_brute,
    count_inclusion_exclusion,
    count_k4_identity,
    count_signed,
    subset_limit,
)
from .covers import (
    CycleStats,
    FullCover,
    build_cover,
    canonical_cover,
    composite_along_walk,
    cover_from_json,
    cover_to_json,
    cycle_stats,
    is_cover_triangle_free,
    load_cover,
    random_cover,
    star_normalize,
)
from .errors import CountOverflowError, DpcoverError, InvalidInputError, ResourceLimitError
from .formulas import (
    BoundPair,
    dual_dp_bounds,
    dual_dp_k4,
    dual_dp_main_term,
    dual_dp_small_complete,
    falling_factorial,
)
from .graphs import (
    EdgeSubsetStructure,
    Graph,
    SignedGraph,
    SubgraphCatalog,
    catalog_subgraphs,
    complete_graph,
    edge_subset_structure,
    graph_from_json,
    graph_to_json,
    resolve_graph,
)
from .perms import Permutation
from .search import (
    SearchResult,
    SearchSpec,
    conjugacy_representatives,
    search_exhaustive,
    search_sampled,
    verify_reduction_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "BoundPair",
    "ColorSetSpec",
    "CountOverflowError",
    "CountResult",
    "CycleStats",
    "DpcoverError",
    "EdgeSubsetStructure",
    "FullCover",
    "Graph",
    "InvalidInputError",
    "Permutation",
    "ResourceLimitError",
    "SearchResult",
    "SearchSpec",
    "SignedGraph",
    "SubgraphCatalog",
    "all_negative_signing",
    "build_cover",
    "canonical_cover",
    "catalog_subgraphs",
    "chromatic_whitney",
    "complete_graph",
    "composite_along_walk",
    "conjugacy_representatives",
    "count_brute",
    "count_inclusion_exclusion",
    "count_k4_identity",
    "count_signed",
    "cover_from_json",
    "cover_to_json",
    "cycle_stats",
    "dual_dp_bounds",
    "dual_dp_k4",
    "dual_dp_main_term",
    "dual_dp_small_complete",
    "edge_subset_structure",
    "even_pairing_cover",
    "falling_factorial",
    "graph_from_json",
    "graph_to_json",
    "is_cover_triangle_free",
    "load_cover",
    "odd_complete_cover",
    "odd_derangement",
    "odd_k4_cover",
    "random_cover",
    "resolve_graph",
    "search_exhaustive",
    "search_sampled",
    "star_normalize",
    "subset_limit",
    "verify_reduction_equivalence",
]
