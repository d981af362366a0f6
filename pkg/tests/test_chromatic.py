from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, naive_colorings, rooted_graphs, rooted_trees, trees
from rooted_csf.chromatic import (
    GuardError,
    brute_force,
    chromatic_X,
    chromatic_m,
    coeff_zk,
    pointing_check,
    pointing_sum,
    powersum_X,
    powersum_X0,
    principal_subtrees,
    recover_X_from_Xne0,
    rooted_X,
    tree_chromatic_dp,
    x0_deletion_contraction,
    x0_deletion_contraction_sym,
    x0_from_xne0,
    x0_tree_recursion_sym,
)
from rooted_csf.graphs import Graph, RootedGraph
from rooted_csf.polynomial import MultiPoly, UniPoly, specialize
from rooted_csf.symmetric import collect_symmetric, convert, expand_vars, split_first_variable


def naive_X(g: Graph, N: int, root=None, mode="all", color=0) -> MultiPoly:
    """Coloring sum by plain enumeration of all color assignments."""
    terms = {}
    for col in naive_colorings(g, N):
        if mode == "eq" and col[root] != color:
            continue
        if mode == "ne" and col[root] == color:
            continue
        e = [0] * (N + 1)
        for c in col:
            e[c] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return MultiPoly(N + 1, terms)


@given(graphs(max_n=5), st.integers(0, 4))
def test_brute_force_matches_naive_enumeration(g, N):
    assert brute_force(g, N) == naive_X(g, N)


@given(rooted_graphs(max_n=5), st.integers(0, 4), st.sampled_from(["eq", "ne"]), st.integers(0, 4))
def test_rooted_brute_force_matches_naive_enumeration(rg, N, mode, color):
    color = min(color, N)
    assert brute_force(rg, N, mode, color) == naive_X(rg.graph, N, rg.root, mode, color)


def test_brute_force_guard():
    with pytest.raises(GuardError):
        brute_force(Graph.empty(30), 30)


@given(graphs(max_n=6))
def test_stable_partition_expansion_matches_brute_force(g):
    assert expand_vars(chromatic_m(g), g.n) == brute_force(g, g.n - 1)


@given(graphs(max_n=6), st.sampled_from(["m", "mt", "p", "e"]))
def test_bases_agree(g, basis):
    assert convert(chromatic_X(g, basis), "m") == chromatic_m(g)


@given(graphs(max_n=6))
def test_power_sum_expansion(g):
    assert convert(powersum_X(g), "m") == chromatic_m(g)


@given(rooted_graphs(max_n=6, connected=True))
def test_deletion_contraction_matches_brute_force(rg):
    assert x0_deletion_contraction(rg, rg.n) == brute_force(rg, rg.n, "eq", 0)


@given(rooted_graphs(max_n=5))
def test_deletion_contraction_on_disconnected_graphs(rg):
    assert x0_deletion_contraction(rg, rg.n) == brute_force(rg, rg.n, "eq", 0)


@given(rooted_trees(max_n=8))
def test_tree_recursion_matches_deletion_contraction(t):
    assert x0_tree_recursion_sym(t) == x0_deletion_contraction_sym(t)


def test_tree_recursion_rejects_non_trees():
    with pytest.raises(ValueError):
        x0_tree_recursion_sym(RootedGraph(Graph.cycle(3), 0))


def test_principal_subtrees_of_a_star():
    subs = principal_subtrees(RootedGraph(Graph.star(3), 0))
    assert [s.n for s in subs] == [1, 1, 1]


@given(rooted_graphs(max_n=6))
def test_rooted_parts_sum_to_X(rg):
    assert rooted_X(rg, "0") + rooted_X(rg, "ne0") == split_first_variable(chromatic_m(rg.graph))
    assert rooted_X(rg, "ne0").coefficient(0) == chromatic_m(rg.graph)


@given(rooted_graphs(max_n=5))
def test_power_sum_X0_literal_sum(rg):
    expanded = expand_vars(powersum_X0(rg), rg.n, z_is_x0=True, powersums_include_x0=True)
    assert expanded == brute_force(rg, rg.n, "eq", 0)
    assert powersum_X0(rg, include_x0=False) == rooted_X(rg, "0")


@given(rooted_graphs(max_n=5), st.integers(0, 5))
def test_z_coefficients_via_independent_sets(rg, k):
    z0 = collect_symmetric(brute_force(rg, rg.n, "eq", 0), distinguished_x0=True)
    zne = collect_symmetric(brute_force(rg, rg.n, "ne", 0), distinguished_x0=True)
    if k >= 1:
        assert z0.coefficient(k) == coeff_zk(rg, k, "root-in")
    assert zne.coefficient(k) == coeff_zk(rg, k, "root-out")


@given(rooted_graphs(max_n=4))
def test_X0_and_X_recovered_from_X_ne0(rg):
    N = rg.n
    xne0 = brute_force(rg, N, "ne", 0)
    assert x0_from_xne0(xne0, N) == brute_force(rg, N, "eq", 0)
    assert recover_X_from_Xne0(xne0, N) == brute_force(rg.graph, N)


@given(graphs(max_n=5))
def test_pointing(g):
    N = max(g.n, 1)
    assert pointing_check(g, N)
    assert pointing_sum(g, N) == brute_force(g, N).euler(0)


@given(trees(max_n=7), st.lists(st.integers(-2, 3), min_size=1, max_size=4))
def test_tree_dp_matches_specialized_brute_force(t, values):
    N = len(values) - 1
    assert tree_chromatic_dp(t, values) == specialize(brute_force(t, N), values)


@given(rooted_trees(max_n=7), st.sampled_from(["eq", "ne"]), st.integers(0, 3))
def test_tree_dp_root_modes(t, mode, i):
    q = UniPoly([0, 1])
    values = [q, q, UniPoly([1]), UniPoly([1])]
    assert tree_chromatic_dp(t, values, (mode, i)) == specialize(brute_force(t, 3, mode, i), values)


def test_tree_dp_large_values_do_not_overflow():
    t = Graph.path(12)
    values = [10 ** 6] * 3
    assert tree_chromatic_dp(t, values) == 3 * 2 ** 11 * 10 ** 72
