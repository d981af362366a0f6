from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, naive_colorings
from rooted_csf.graphs import (
    Graph,
    GraphFormatError,
    RootedGraph,
    WeightedGraph,
    chromatic_number,
    chromatic_polynomial,
    count_proper_colorings,
    independent_sets,
    linear_coefficient,
    one_line,
    parse_graph_text,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@given(graphs(max_n=7))
def test_structure_agrees_with_networkx(g):
    h = to_nx(g)
    if g.n:
        assert g.is_connected() == nx.is_connected(h)
    assert g.is_bipartite() == nx.is_bipartite(h)
    assert g.is_tree() == (g.n > 0 and nx.is_tree(h))
    assert len(g.component_masks()) == nx.number_connected_components(h)


@given(graphs(max_n=5), st.integers(0, 4))
def test_chromatic_polynomial_counts_colorings(g, k):
    chi = chromatic_polynomial(g)
    assert chi(k) == count_proper_colorings(g, k)
    if k:
        assert chi(k) == len(list(naive_colorings(g, k - 1)))


@given(graphs(max_n=6))
def test_chromatic_number_is_least_k_with_a_coloring(g):
    k = chromatic_number(g)
    assert count_proper_colorings(g, k) > 0
    assert k == 0 or count_proper_colorings(g, k - 1) == 0


def test_small_chromatic_polynomials():
    assert chromatic_polynomial(Graph.path(3)).coeffs == (0, 1, -2, 1)
    assert chromatic_polynomial(Graph.complete(3))(3) == 6
    assert chromatic_polynomial(Graph.cycle(4))(2) == 2
    assert linear_coefficient(Graph.path(2)) == -1


@given(graphs(max_n=6), st.integers(0, 6))
def test_independent_sets(g, size):
    found = list(independent_sets(g, size))
    assert len(found) == len(set(found))
    assert all(bin(s).count("1") == size and g.is_independent(s) for s in found)
    brute = [s for s in range(1 << g.n) if bin(s).count("1") == size and g.is_independent(s)]
    assert sorted(found) == brute


@given(graphs(max_n=6))
def test_text_round_trip(g):
    assert parse_graph_text(g.to_text()) == g
    assert parse_graph_text(one_line(g.to_text())) == g


def test_rooted_and_weighted_parsing():
    rg = parse_graph_text("root 1\n3 2\n0 1\n1 2\n")
    assert isinstance(rg, RootedGraph) and rg.root == 1 and rg.graph == Graph.path(3)
    assert parse_graph_text(rg.to_text()) == rg
    wg = parse_graph_text("weights 3 1 1; 3 3; 0 1; 1 2; 1 2", multigraph=True)
    assert isinstance(wg, WeightedGraph)
    assert wg.weights == (3, 1, 1) and len(wg.edges) == 3


@pytest.mark.parametrize("text", [
    "",
    "3",
    "3 2\n0 1",
    "3 1\n0 3",
    "2 1\n0 0",
    "2 2\n0 1\n0 1",
    "root 5\n2 1\n0 1",
    "a b",
    "65 0",
])
def test_malformed_text_is_rejected(text):
    with pytest.raises(GraphFormatError):
        parse_graph_text(text)


def test_contraction_merges_neighborhoods():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 3), (2, 3)])
    h, mapping = g.contract(0, 1)
    # a 4-cycle with one edge contracted is a triangle
    assert h.n == 3 and h.m == 3
    assert mapping[0] == mapping[1]
