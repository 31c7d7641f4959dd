"""Exact solvers for induced-subgraph problems on graphs with mim-width 1 layouts."""

from .chain import ChainOrders, compute_chain_orders, dump_orders, verify_chain_orders
from .dp import CATALOG, EXTRA, ProblemSpec, Solution, problem_spec, solve, solve_catalog
from .errors import (ContractError, InputError, InvariantError, MimsolveError, ParseError,
                     PreconditionError, SizeError, WidthError)
from .graph import Graph, certify, complement, cut_mim, induced_subgraph, is_chain_cut
from .hardness import PRESETS, build_reduction, certify_reduction, reduction_sanity
from .layout import (CotreeNode, LinearLayout, RootedLayout, WidthReport, concatenate,
                     cotree_layout, graft, interval_layout, layout_from_order,
                     permutation_layout, validate_width)
from .oracles import brute_max_induced, brute_min_deletion, brute_mimwidth_le, brute_vertex_cover
from .reps import RepKind, cluster_rep, cocluster_rep, connectivity_rep, independence_rep

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "EXTRA", "PRESETS", "ChainOrders", "ContractError", "CotreeNode", "Graph",
    "InputError", "InvariantError", "LinearLayout", "MimsolveError", "ParseError",
    "PreconditionError", "ProblemSpec", "RepKind", "RootedLayout", "SizeError", "Solution",
    "WidthError", "WidthReport", "brute_max_induced", "brute_min_deletion",
    "brute_mimwidth_le", "brute_vertex_cover", "build_reduction", "certify",
    "certify_reduction", "cluster_rep", "cocluster_rep", "complement", "compute_chain_orders",
    "concatenate", "connectivity_rep", "cotree_layout", "cut_mim", "dump_orders", "graft",
    "independence_rep", "induced_subgraph", "interval_layout", "is_chain_cut",
    "layout_from_order", "permutation_layout", "problem_spec", "reduction_sanity", "solve",
    "solve_catalog", "validate_width", "verify_chain_orders",
]
