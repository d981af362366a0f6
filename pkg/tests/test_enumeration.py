from __future__ import annotations

import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, rooted_graphs, rooted_trees, trees
from rooted_csf.enumeration import (
    Poset,
    canonical_graph,
    canonical_poset,
    canonical_rooted_graph,
    free_tree_canonical,
    free_trees,
    graphs_isomorphic,
    incomparability_graph,
    is_31_free,
    naive_free_tree_forms,
    naive_poset_forms,
    naive_rooted_shapes,
    parse_poset_text,
    posets,
    prufer_decode,
    rooted_graphs as enum_rooted_graphs,
    rooted_iso,
    rooted_iso_bruteforce,
    rooted_orbit_count,
    rooted_shape,
    rooted_trees as enum_rooted_trees,
    small_graphs,
    tree_centers,
)
from rooted_csf.graphs import Graph, RootedGraph

ROOTED = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766]
FREE = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301]
POSETS = [1, 1, 2, 5, 16, 63, 318]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes)}
    return Graph.from_edges(len(idx), [(idx[a], idx[b]) for a, b in h.edges])


def test_rooted_tree_counts():
    assert [sum(1 for _ in enum_rooted_trees(n)) for n in range(1, 13)] == ROOTED


def test_free_tree_counts():
    assert [sum(1 for _ in free_trees(n)) for n in range(1, 14)] == FREE


@pytest.mark.parametrize("n", range(1, 9))
def test_generators_agree_with_naive_dedup(n):
    assert {t.shape() for t in enum_rooted_trees(n)} == naive_rooted_shapes(n)
    assert {free_tree_canonical(t) for t in free_trees(n)} == naive_free_tree_forms(n)


@pytest.mark.parametrize("n", range(2, 10))
def test_free_trees_against_networkx(n):
    ours = Counter(free_tree_canonical(t) for t in free_trees(n))
    theirs = Counter(free_tree_canonical(from_nx(h)) for h in nx.nonisomorphic_trees(n))
    assert ours == theirs and max(ours.values()) == 1


def test_graphs_against_networkx_atlas():
    atlas = Counter()
    for h in nx.graph_atlas_g():
        atlas[(h.number_of_nodes(), canonical_graph(from_nx(h)))] += 1
    ours = Counter((n, canonical_graph(g)) for n in range(8) for g in small_graphs(n))
    assert ours == atlas


def test_connected_graph_counts():
    assert [sum(1 for _ in small_graphs(n, True)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_rooted_graph_orbits():
    assert sum(1 for _ in enum_rooted_graphs(5)) == 58
    for n in range(1, 9):
        for t in free_trees(n):
            assert rooted_orbit_count(t) == len({canonical_rooted_graph(RootedGraph(t, r)) for r in range(n)})


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_graph(h) == canonical_graph(g)
    assert graphs_isomorphic(g, h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_separates_like_networkx(a, b):
    assert (canonical_graph(a) == canonical_graph(b)) == nx.is_isomorphic(to_nx(a), to_nx(b))


@given(rooted_graphs(max_n=6), rooted_graphs(max_n=6))
def test_rooted_canonical_form(a, b):
    na, nb = to_nx(a.graph), to_nx(b.graph)
    nx.set_node_attributes(na, {v: v == a.root for v in na}, "root")
    nx.set_node_attributes(nb, {v: v == b.root for v in nb}, "root")
    iso = nx.is_isomorphic(na, nb, node_match=lambda x, y: x["root"] == y["root"])
    assert (canonical_rooted_graph(a) == canonical_rooted_graph(b)) == iso


@given(rooted_trees(max_n=7), rooted_trees(max_n=7))
def test_rooted_tree_iso_matches_brute_force(a, b):
    assert rooted_iso(a, b) == rooted_iso_bruteforce(a, b)


@given(rooted_trees(max_n=9), st.randoms(use_true_random=False))
def test_rooted_shape_invariant(t, rnd):
    perm = list(range(t.n))
    rnd.shuffle(perm)
    assert rooted_shape(t.relabel(perm)) == rooted_shape(t)


@given(trees(max_n=10))
def test_tree_centers_against_networkx(t):
    assert sorted(tree_centers(t)) == sorted(nx.center(to_nx(t)))


def test_prufer_round_trip_counts():
    # Cayley: n^(n-2) labeled trees, all decoded trees are trees
    n = 5
    seen = set()
    for code in range(n ** (n - 2)):
        seq = [code // n ** i % n for i in range(n - 2)]
        t = prufer_decode(seq)
        assert t.is_tree()
        seen.add(t.edges)
    assert len(seen) == n ** (n - 2)


def test_poset_counts():
    assert [sum(1 for _ in posets(n)) for n in range(7)] == POSETS


@pytest.mark.parametrize("n", range(0, 5))
def test_posets_agree_with_naive_dedup(n):
    assert {canonical_poset(p) for p in posets(n)} == naive_poset_forms(n)


def test_poset_validation_and_text():
    with pytest.raises(ValueError):
        Poset(3, (0b010, 0b100, 0))
    with pytest.raises(ValueError):
        Poset.from_relations(2, [(0, 1), (1, 0)])
    p = Poset.from_relations(3, [(0, 1), (1, 2)])
    assert p.less(0, 2)
    assert parse_poset_text(p.to_text()) == p


def test_three_plus_one_free():
    chain = Poset.chain(3)
    bad = Poset(4, chain.up + (0,))
    assert not is_31_free(bad)
    assert is_31_free(Poset.chain(4))
    assert is_31_free(Poset.antichain(4))
    assert incomparability_graph(bad).m == 3


def test_enumeration_range_checks():
    with pytest.raises(ValueError):
        list(small_graphs(8))
    with pytest.raises(ValueError):
        list(posets(7))
    with pytest.raises(ValueError):
        list(enum_rooted_trees(0))
