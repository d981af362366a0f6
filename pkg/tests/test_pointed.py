from __future__ import annotations

import networkx as nx
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import graphs, rooted_graphs, rooted_trees
from rooted_csf.chromatic import brute_force, powersum_X, rooted_X
from rooted_csf.graphs import Graph, RootedGraph, WeightedGraph
from rooted_csf.pointed import (
    P_from_rootedU,
    PartPoly,
    X_from_U,
    ans_paw_check,
    f_H,
    internal_spanning_trees,
    internal_trees_by_activity,
    involution,
    negate_z,
    phi_transform,
    pointed_P,
    pointed_positive,
    psi_transform,
    random_edge_orders,
    rooted_u,
    u_poly,
    w_poly,
)
from rooted_csf.symmetric import collect_symmetric


def tutte_at_1_0(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    x, y = sympy.symbols("x y")
    return int(nx.tutte_polynomial(h).subs({x: 1, y: 0}))


@given(rooted_graphs(max_n=6))
def test_phi_of_z_times_pointed_is_X0(rg):
    zP = pointed_P(rg).times_z(1)
    assert phi_transform(zP) == rooted_X(rg, "0")
    assert psi_transform(rooted_X(rg, "0")) == zP


@given(rooted_graphs(max_n=5))
def test_pointed_against_brute_force(rg):
    z0 = collect_symmetric(brute_force(rg, rg.n, "eq", 0), distinguished_x0=True)
    assert phi_transform(pointed_P(rg).times_z(1)) == z0


@given(rooted_graphs(max_n=6))
def test_pointed_sign_pattern(rg):
    assert pointed_positive(rg)
    assert negate_z(negate_z(pointed_P(rg))) == pointed_P(rg)


@given(graphs(max_n=6, connected=True), st.integers(0, 1000))
def test_internal_spanning_trees_count_is_tutte_value(g, seed):
    expected = tutte_at_1_0(g)
    base = internal_spanning_trees(g)
    assert base.involution == base.signed_sum == expected
    for order in random_edge_orders(g.m, 2, seed):
        counts = internal_spanning_trees(g, order)
        assert counts.involution == expected
        assert internal_trees_by_activity(g, order) == expected
    assert f_H(g) == expected


@given(graphs(max_n=5, connected=True))
def test_involution_is_an_involution(g):
    edges = list(g.edges)
    for s in range(1 << len(edges)):
        assert involution(g.n, edges, involution(g.n, edges, s)) == s


@given(rooted_graphs(max_n=6, connected=True))
def test_negated_z_coefficients_via_connected_subgraphs(rg):
    assert all(ans_paw_check(rg, k) for k in range(rg.n))


@given(rooted_trees(max_n=7))
def test_tree_subgraph_multipliers_are_one(t):
    assert f_H(t.graph) == 1


def test_printed_U_examples():
    p3 = Graph.path(3)
    assert u_poly(p3) == PartPoly.x([1, 1, 1]) + PartPoly.x([2, 1], c=2) + PartPoly.x([3])
    assert str(rooted_u(RootedGraph(p3, 1))) == "x1^2*z + 2*x1*z^2 + z^3"
    w = w_poly(WeightedGraph(3, ((0, 1), (1, 2)), (3, 1, 1)))
    assert w == PartPoly.x([3, 1, 1]) + PartPoly.x([3, 2]) + PartPoly.x([4, 1]) + PartPoly.x([5])


@given(graphs(max_n=6))
def test_U_equals_W_at_unit_weights(g):
    assert u_poly(g) == w_poly(WeightedGraph.unit(g))


@given(graphs(max_n=6))
def test_X_recovered_from_U(g):
    assert X_from_U(u_poly(g), g.n) == powersum_X(g)


@given(rooted_graphs(max_n=6))
def test_P_recovered_from_rooted_U(rg):
    assert P_from_rootedU(rooted_u(rg), rg.n) == pointed_P(rg)


def test_cycle_has_y_terms():
    u = u_poly(Graph.cycle(3))
    assert not u.y_free()
    assert u_poly(Graph.path(4)).y_free()


def test_partpoly_json_round_trip():
    u = rooted_u(RootedGraph(Graph.cycle(4), 0))
    assert PartPoly.from_json(u.to_json()) == u
    assert u.to_json()["namespace"] == "part-size"


def test_weighted_multigraph_loops_and_parallel_edges():
    # parallel pair: contracting one copy turns the other into a loop (factor y)
    w = w_poly(WeightedGraph(2, ((0, 1), (0, 1)), (1, 1)))
    assert w == PartPoly.x([1, 1]) + PartPoly.x([2], c=1) + PartPoly.x([2], y=1)


def test_involution_rejects_disconnected_graph():
    with pytest.raises(ValueError):
        internal_spanning_trees(Graph.empty(2))
