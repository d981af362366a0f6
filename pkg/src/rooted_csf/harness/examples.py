"""Worked examples with their published values, each returning labeled checks."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, List, Tuple

from ..chromatic import (
    brute_force,
    pointing_sum,
    tree_chromatic_dp,
    x0_deletion_contraction,
    x0_from_xne0,
    x0_tree_recursion,
)
from ..graphs import Graph, RootedGraph, WeightedGraph
from ..pointed import PartPoly, phi_transform, psi_transform, rooted_u, u_poly, w_poly
from ..polynomial import MultiPoly, UniPoly, specialize
from ..symmetric import ZPoly

Checks = List[Tuple[str, bool]]

P3 = Graph.path(3)
END = RootedGraph(P3, 0)
OTHER_END = RootedGraph(P3, 2)
MIDDLE = RootedGraph(P3, 1)
Q = UniPoly([0, 1])


def poly3(*terms) -> MultiPoly:
    """Polynomial in x0, x1, x2 from ``(coeff, e0, e1, e2)`` tuples."""
    return MultiPoly(3, {(a, b, c): k for k, a, b, c in terms})


X_P3 = poly3((6, 1, 1, 1), (1, 2, 1, 0), (1, 2, 0, 1), (1, 1, 2, 0), (1, 0, 2, 1), (1, 1, 0, 2), (1, 0, 1, 2))
X0_END = poly3((2, 1, 1, 1), (1, 2, 1, 0), (1, 2, 0, 1))
XNE0_END = poly3((4, 1, 1, 1), (1, 1, 2, 0), (1, 1, 0, 2), (1, 0, 2, 1), (1, 0, 1, 2))
X0_MIDDLE = poly3((2, 1, 1, 1), (1, 1, 2, 0), (1, 1, 0, 2))
XNE0_MIDDLE = poly3((4, 1, 1, 1), (1, 2, 1, 0), (1, 2, 0, 1), (1, 0, 1, 2), (1, 0, 2, 1))
POINTING_P3 = poly3((6, 1, 1, 1), (2, 2, 1, 0), (2, 2, 0, 1), (1, 1, 2, 0), (1, 1, 0, 2))


def path_colorings() -> Checks:
    return [("X of the 3-vertex path, N=2", brute_force(P3, 2) == X_P3)]


def path_endpoint() -> Checks:
    return [
        ("X_0, root at an endpoint", brute_force(END, 2, "eq", 0) == X0_END),
        ("X_0, root at the other endpoint", brute_force(OTHER_END, 2, "eq", 0) == X0_END),
        ("X_{!=0}, root at an endpoint", brute_force(END, 2, "ne", 0) == XNE0_END),
        ("X_{!=0}, root at the other endpoint", brute_force(OTHER_END, 2, "ne", 0) == XNE0_END),
        ("X_0 recovered from the printed X_{!=0}", x0_from_xne0(XNE0_END, 2) == X0_END),
    ]


def path_middle() -> Checks:
    return [
        ("X_0, root in the middle", brute_force(MIDDLE, 2, "eq", 0) == X0_MIDDLE),
        ("X_{!=0}, root in the middle", brute_force(MIDDLE, 2, "ne", 0) == XNE0_MIDDLE),
        ("tree recursion, root in the middle", x0_tree_recursion(MIDDLE, 2) == X0_MIDDLE),
        ("X_0 recovered from the printed X_{!=0}", x0_from_xne0(XNE0_MIDDLE, 2) == X0_MIDDLE),
    ]


def path_deletion_contraction() -> Checks:
    deleted = x0_deletion_contraction(END.delete_edge(0, 1), 2)
    contracted = x0_deletion_contraction(END.contract_root_edge(0, 1), 2)
    x0 = MultiPoly.var(3, 0)
    return [
        ("X_0(G - e) = x0(2x0x1 + 2x0x2 + 2x1x2)", deleted == x0 * poly3((2, 1, 1, 0), (2, 1, 0, 1), (2, 0, 1, 1))),
        ("x0 X_0(G / e) = x0(x0x1 + x0x2)", x0 * contracted == x0 * poly3((1, 1, 1, 0), (1, 1, 0, 1))),
        ("difference is the endpoint X_0", deleted - x0 * contracted == X0_END),
        ("full recursion", x0_deletion_contraction(END, 2) == X0_END),
    ]


def path_pointing() -> Checks:
    return [
        ("sum over roots of X_0", pointing_sum(P3, 2) == POINTING_P3),
        ("x0 d/dx0 X", brute_force(P3, 2).euler(0) == POINTING_P3),
    ]


def path_principal() -> Checks:
    expected = UniPoly([0, 1, 2, 6, 2, 1])
    vals = [UniPoly([1]), Q, Q ** 2]
    return [
        ("printed X at (1, q, q^2)", specialize(X_P3, vals) == expected),
        ("tree DP at (1, q, q^2)", tree_chromatic_dp(P3, vals) == expected),
    ]


def u_examples() -> Checks:
    return [
        ("U of the 3-vertex path", u_poly(P3) == PartPoly({((1, 1, 1), 0, 0): 1, ((2, 1), 0, 0): 2, ((3,), 0, 0): 1})),
        ("W with weights (3,1,1)",
         w_poly(WeightedGraph(3, ((0, 1), (1, 2)), (3, 1, 1)))
         == PartPoly({((3, 1, 1), 0, 0): 1, ((3, 2), 0, 0): 1, ((4, 1), 0, 0): 1, ((5,), 0, 0): 1})),
        ("rooted U, root in the middle",
         rooted_u(MIDDLE) == PartPoly({((1, 1), 0, 1): 1, ((1,), 0, 2): 2, ((), 0, 3): 1})),
    ]


POINTED_P = ZPoly.from_terms(
    [(0, [1, 1, 1, 1], 1), (0, [2, 1, 1], -2), (0, [3, 1], 1),
     (1, [1, 1, 1], -2), (1, [2, 1], 2), (1, [3], -1),
     (2, [1, 1], 3), (3, [1], -3), (4, [], 1)], "p")
POINTED_X0 = ZPoly.from_terms(
    [(1, [1, 1, 1, 1], 1), (1, [2, 1, 1], -2), (1, [3, 1], 1),
     (2, [1, 1, 1], 2), (2, [2, 1], -2), (3, [1, 1], 1)], "p")


def pointed_transform() -> Checks:
    zP = POINTED_P.times_z(1)
    return [
        ("phi(z P) gives the printed X_0", phi_transform(zP) == POINTED_X0),
        ("psi(X_0) gives z P back", psi_transform(POINTED_X0) == zP),
        ("z-coefficients agree", zP.coefficient(1) == POINTED_X0.coefficient(1)),
    ]


def _mt(terms) -> ZPoly:
    return ZPoly.from_terms(terms, "mt")


STANLEY_X = ZPoly.from_terms([(0, [2, 2, 1], 2), (0, [2, 1, 1, 1], 4), (0, [1, 1, 1, 1, 1], 1)], "mt")
A = _mt([(1, [2, 1, 1], 2), (1, [1, 1, 1, 1], 1), (2, [2, 1], 2), (2, [1, 1, 1], 2)])
B = _mt([(1, [2, 2], 2), (1, [2, 1, 1], 4), (1, [1, 1, 1, 1], 1)])
C = _mt([(1, [2, 2], 1), (1, [2, 1, 1], 3), (1, [1, 1, 1, 1], 1), (2, [2, 1], 1), (2, [1, 1, 1], 1)])
D = _mt([(1, [2, 1, 1], 3), (1, [1, 1, 1, 1], 1), (2, [2, 1], 2), (2, [1, 1, 1], 1)])
E = _mt([(1, [2, 1, 1], 1), (1, [1, 1, 1, 1], 1), (2, [2, 1], 2), (2, [1, 1, 1], 3)])


def stanley_pair() -> Checks:
    from .search import search_collision

    groups = [grp for grp in search_collision("X-unrooted", 5) if grp.value == STANLEY_X.coefficient(0)]
    if len(groups) != 1 or len(groups[0].members) != 2:
        return [("one pair of 5-vertex graphs with the printed X", False)]
    from ..chromatic import rooted_X

    multisets = []
    for g in groups[0].members:
        multisets.append(Counter(rooted_X(RootedGraph(g, r), "0").key() for r in range(g.n)))
    want_g = Counter({A.key(): 4, B.key(): 1})
    want_h = Counter({C.key(): 2, A.key(): 1, D.key(): 1, E.key(): 1})
    return [
        ("one pair of 5-vertex graphs with the printed X", True),
        ("rooted X_0 multisets match the printed ones", sorted([want_g, want_h], key=str) == sorted(multisets, key=str)),
    ]


EXAMPLES: Dict[str, Callable[[], Checks]] = {
    "path-colorings": path_colorings,
    "path-endpoint": path_endpoint,
    "path-middle": path_middle,
    "path-deletion-contraction": path_deletion_contraction,
    "path-pointing": path_pointing,
    "path-principal": path_principal,
    "u-polynomials": u_examples,
    "pointed-transform": pointed_transform,
    "stanley-pair": stanley_pair,
}
