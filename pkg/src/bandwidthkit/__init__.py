"""Bandwidth approximation for trees of bounded pathwidth.

Exact oracles for small instances, the 48b^3 caterpillar approximation, the
(768 b^3)^p tree approximation, structural tools (pathwidth, recursive path
decompositions, folds) and instance generators, including the size
arithmetic of the W[1]-hardness reduction for caterpillars.
"""
from .cat_approx import (
    CatResult,
    SccResult,
    StrayInterval,
    cat_alg,
    color_intervals,
    directional_stray_graph,
    find_scc,
    neighbor_sets,
)
from .decomposition import (
    CaterpillarView,
    HangingSubtree,
    RecursivePathDecomposition,
    Stray,
    caterpillar_view,
    check_decomposition,
    is_caterpillar,
    pathwidth,
    recursive_path_decomposition,
    simplified_instance,
)
from .errors import (
    BandwidthKitError,
    FormatError,
    InvalidLayoutError,
    InvalidTreeError,
    InvalidVertexError,
    NotACaterpillarError,
    ParameterError,
    PreconditionError,
    TooLargeError,
)
from .formats import (
    format_edge_list,
    format_layout,
    parse_edge_list,
    parse_layout,
    read_edge_list,
    read_layout,
    write_edge_list,
    write_layout,
)
from .graph_core import (
    Tree,
    bandwidth_of_layout,
    bfs_layout,
    check_layout,
    complete_binary_tree,
    compress,
    diameter_path,
    inclusion_interval,
    is_layout,
    path_tree,
    right_fold,
    star_tree,
)
from .oracles import (
    DensityWitness,
    exact_bandwidth_bruteforce,
    exact_bandwidth_saxe,
    local_density,
    local_density_enumerate,
    lower_bounds_report,
    saxe_decide,
)
from .tree_approx import ApproxResult, approximate_bandwidth, search_smallest_b, tree_alg

__version__ = "0.1.0"
