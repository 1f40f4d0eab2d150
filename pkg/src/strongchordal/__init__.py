"""Strongly chordal graphs via compatible subtree representations of weighted trees."""
from .extraction import (
    IncompatibleRepresentation,
    OvershadowDigraph,
    build_overshadow_digraph,
    deepest_root_vertex,
    extract_strong_elimination_order,
    order_from_verdicts,
)
from .generators import (
    SplitMix64,
    generate_random_chordal_representation,
    generate_rdv_representation,
    generate_strongly_chordal_graph,
    generate_sun,
)
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    VertexOrder,
    closed_neighborhood,
    induced_subgraph,
    is_simple_vertex,
    is_simplicial_vertex,
    parse_graph,
    serialize_graph,
)
from .host_tree import (
    HostTree,
    OvershadowVerdict,
    Subtree,
    TreeError,
    compatible_pair,
    is_valid_subtree,
    make_subtree,
    node_depth,
    overshadows,
)
from .orders import (
    InvalidOrderError,
    is_perfect_elimination_order,
    is_strong_elimination_order,
    peo_to_representation,
    seo_to_representation,
)
from .recognition import (
    SizeLimitExceeded,
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
    greedy_simplicial_elimination,
)
from .representation import (
    RepresentationFormatError,
    SubdivisionReport,
    TreeRepresentation,
    bottom_up_order,
    intersection_graph,
    is_compatible_representation,
    is_rdv,
    parse_representation,
    serialize_representation,
    subdivide_unit_weights,
)

__version__ = "0.1.0"
