"""Strong Bruhat order on signed permutations.

Covers, degrees and descent sets for the hyperoctahedral group B_n,
the weighted degree graphs with their rectangle geometry, and exhaustive
(optionally parallel) enumeration of extremal elements.
"""

from .signed import (
    ParseError,
    ReflectionLabel,
    SignedPermutation,
    UndefinedReflectionError,
    all_reflections,
    apply_u,
    coxeter_length,
    format_full_sequence,
    format_window,
    full_sequence,
    generators,
    inverse_position,
    negate,
    parse_window,
    u_defined,
    word_lengths_by_bfs,
)
from .order import (
    NotADescentSetError,
    covers_down,
    descent_set,
    descent_set_oracle,
    descents_to_text,
    down_degree,
    down_degree_oracle,
    parse_descents,
    reconstruct_from_descents,
    total_degree,
    up_degree,
)
from .graphs import (
    WeightedDegreeGraph,
    alpha,
    beta,
    build_graph,
    edge_down,
    edge_total,
    export_graph,
    flatten,
    origin_in_rectangle,
    r_statistic,
    r_statistic_by_rectangles,
    rectangle_interior_values,
    rectangle_is_empty,
    remove,
    total_weight,
    union_degree,
    vertex_degree,
)
from .extremal import (
    ExtremalReport,
    LemmaReport,
    claimed_maximizers,
    degree_histogram,
    enumerate_bn,
    enumerate_block,
    expected_down_family,
    expected_total_family,
    lemma_suite,
    max_statistic,
)

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "ReflectionLabel",
    "SignedPermutation",
    "UndefinedReflectionError",
    "all_reflections",
    "apply_u",
    "coxeter_length",
    "format_full_sequence",
    "format_window",
    "full_sequence",
    "generators",
    "inverse_position",
    "negate",
    "parse_window",
    "u_defined",
    "word_lengths_by_bfs",
    "NotADescentSetError",
    "covers_down",
    "descent_set",
    "descent_set_oracle",
    "descents_to_text",
    "down_degree",
    "down_degree_oracle",
    "parse_descents",
    "reconstruct_from_descents",
    "total_degree",
    "up_degree",
    "WeightedDegreeGraph",
    "alpha",
    "beta",
    "build_graph",
    "edge_down",
    "edge_total",
    "export_graph",
    "flatten",
    "origin_in_rectangle",
    "r_statistic",
    "r_statistic_by_rectangles",
    "rectangle_interior_values",
    "rectangle_is_empty",
    "remove",
    "total_weight",
    "union_degree",
    "vertex_degree",
    "ExtremalReport",
    "LemmaReport",
    "claimed_maximizers",
    "degree_histogram",
    "enumerate_bn",
    "enumerate_block",
    "expected_down_family",
    "expected_total_family",
    "lemma_suite",
    "max_statistic",
    "__version__",
]
