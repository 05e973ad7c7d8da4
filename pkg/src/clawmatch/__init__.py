"""clawmatch: perfect-matching certificates for claw-free cubic bridgeless graphs.

The library decomposes 2-edge-connected claw-free cubic graphs (K4, ring
of diamonds, or triangle/diamond-string expansion of a cubic base
multigraph), lifts cycle-space members of the base to 2-factors, and
emits explicit families of more than 2^(n/12) distinct perfect matchings,
cross-checked against exact brute-force counts.
"""

from .counting import (
    CountReport,
    count_perfect_matchings,
    count_report,
    count_two_factors,
    enumerate_perfect_matchings,
    enumerate_two_factors,
    max_length_two_factor,
)
from .cyclespace import CycleBasis, cycle_basis, enumerate_cycle_space, is_even_subgraph
from .errors import (
    BoundFailure,
    CapExceeded,
    DegreeViolation,
    GraphError,
    InvalidBase,
    NoTwoFactor,
    NotClawFree,
    NotCubic,
    NotSimple,
    NotTwoEdgeConnected,
    ParallelCollision,
    ParseError,
    StructureViolation,
)
from .expansion import (
    Certificate,
    RoutingChoice,
    all_routings,
    certificate_problems,
    certify,
    complement_matching,
    expand,
    traversed_diamonds,
    verify_certificate,
    verify_3ec_remark,
    zero_routing,
)
from .formats import (
    parse_graph,
    serialize_certificate,
    serialize_decomposition,
    serialize_graph,
)
from .graphs import (
    Claw,
    EdgeSubset,
    Multigraph,
    bridges,
    connected_components,
    find_claw,
    is_claw_free,
    is_connected,
    is_cubic,
    is_perfect_matching,
    is_three_edge_connected,
    is_two_edge_connected,
    is_two_factor,
    subset_degrees,
)
from .structure import (
    KIND_EXPANDED,
    KIND_K4,
    KIND_RING,
    Decomposition,
    Diamond,
    DiamondString,
    EdgeReplacement,
    build,
    classify,
    contract_to_base,
    figure1_graph,
    find_diamonds,
    find_strings,
    random_base,
    ring_of_diamonds,
    string_passages,
)

__all__ = [
    "BoundFailure",
    "CapExceeded",
    "Certificate",
    "Claw",
    "CountReport",
    "CycleBasis",
    "Decomposition",
    "DegreeViolation",
    "Diamond",
    "DiamondString",
    "EdgeReplacement",
    "EdgeSubset",
    "GraphError",
    "InvalidBase",
    "KIND_EXPANDED",
    "KIND_K4",
    "KIND_RING",
    "Multigraph",
    "NoTwoFactor",
    "NotClawFree",
    "NotCubic",
    "NotSimple",
    "NotTwoEdgeConnected",
    "ParallelCollision",
    "ParseError",
    "RoutingChoice",
    "StructureViolation",
    "all_routings",
    "bridges",
    "build",
    "certificate_problems",
    "certify",
    "classify",
    "complement_matching",
    "connected_components",
    "contract_to_base",
    "count_perfect_matchings",
    "count_report",
    "count_two_factors",
    "cycle_basis",
    "enumerate_cycle_space",
    "enumerate_perfect_matchings",
    "enumerate_two_factors",
    "expand",
    "figure1_graph",
    "find_claw",
    "find_diamonds",
    "find_strings",
    "is_claw_free",
    "is_connected",
    "is_cubic",
    "is_even_subgraph",
    "is_perfect_matching",
    "is_three_edge_connected",
    "is_two_edge_connected",
    "is_two_factor",
    "max_length_two_factor",
    "parse_graph",
    "random_base",
    "ring_of_diamonds",
    "serialize_certificate",
    "serialize_decomposition",
    "serialize_graph",
    "string_passages",
    "subset_degrees",
    "traversed_diamonds",
    "verify_certificate",
    "verify_3ec_remark",
    "zero_routing",
]
