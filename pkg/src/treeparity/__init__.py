"""Parity of plane trees, rotation groups of bipartite trees, and the graph of trees."""

from .parity import (
    OddVertexCountError,
    Parity,
    TranspositionMove,
    chain_reduction,
    count_inversions,
    join_sum,
    parity_free,
    parity_rooted,
    permute_level_one,
    reroot_along_marked,
    split_sum,
    transpose,
    transposition_moves,
)
from .perm import PermGroup, Permutation, compose, contains, cycle_type, group_order, in_alternating, sign
from .rotation import (
    alternating_signature,
    clean_tree,
    even_degree_census,
    make_bipartite,
    rotation_group,
    rotation_pair,
    sigma_parities,
)
from .spectra import IntPolynomial, char_poly, find_cospectral
from .treegraph import TreeGraph, build_tree_graph, check_bipartite_by_parity, export, planarity
from .trees import (
    BracketParseError,
    Color,
    FreeTree,
    PlaneRootedTree,
    bipartite_passport,
    canonical_key,
    decode_bracket,
    degree_passport,
    encode_bracket,
    enumerate_free_trees,
    free_to_plane,
    plane_to_free,
)

__version__ = "0.1.0"
