"""Chromatic symmetric functions of rooted graphs.

Exact (rational) computation of X_G, the rooted functions X_0 and X_{!=0},
their univariate specializations, pointed and U-polynomials, plus
enumeration of small trees, graphs and posets for exhaustive sweeps.
"""

from .chromatic import (
    GuardError,
    brute_force,
    chromatic_X,
    chromatic_m,
    powersum_X,
    powersum_X0,
    rooted_X,
    tree_chromatic_dp,
    x0_deletion_contraction,
    x0_tree_recursion,
)
from .enumeration import Poset, free_trees, posets, rooted_trees, small_graphs
from .graphs import Graph, GraphFormatError, RootedGraph, WeightedGraph, chromatic_polynomial, parse_graph_text
from .irreducibility import eisenstein, f_specialize, irreducibility_certificate, spec_kp, x_2p
from .pointed import PartPoly, pointed_P, rooted_u, u_poly, w_poly
from .polynomial import MultiPoly, UniPoly, specialize
from .symmetric import DegreeBoundError, SymExpansion, ZPoly, convert

__version__ = "0.1.0"

__all__ = [
    "DegreeBoundError", "Graph", "GraphFormatError", "GuardError", "MultiPoly", "PartPoly", "Poset",
    "RootedGraph", "SymExpansion", "UniPoly", "WeightedGraph", "ZPoly",
    "brute_force", "chromatic_X", "chromatic_m", "chromatic_polynomial", "convert", "eisenstein",
    "f_specialize", "free_trees", "irreducibility_certificate", "parse_graph_text", "pointed_P",
    "posets", "powersum_X", "powersum_X0", "rooted_X", "rooted_trees", "rooted_u", "small_graphs",
    "spec_kp", "specialize", "tree_chromatic_dp", "u_poly", "w_poly", "x0_deletion_contraction",
    "x0_tree_recursion", "x_2p",
]
