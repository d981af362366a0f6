from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import graphs, rooted_graphs, rooted_trees, trees
from rooted_csf.chromatic import brute_force
from rooted_csf.enumeration import rooted_shape
from rooted_csf.graphs import Graph, RootedGraph
from rooted_csf.irreducibility import (
    aj2_formula,
    aj_formula,
    eisenstein,
    f0_nested,
    f0_tree,
    f_specialize,
    irreducibility_certificate,
    linear_coeff_parity,
    spec_kp,
    x0det2_relations,
    x_2p,
)
from rooted_csf.polynomial import UniPoly, rev_n, specialize

Q = UniPoly([0, 1])
ONE = UniPoly([1])


def test_path_endpoint_values():
    end = RootedGraph(Graph.path(3), 0)
    assert f_specialize(end, "f0") == UniPoly([0, 2, 6, 1])
    # two variables only: x0 = x1 = q
    assert specialize(brute_force(end, 1, "eq", 0), [Q, Q]) == UniPoly([0, 0, 0, 1])
    assert specialize(brute_force(end, 2, "eq", 0), [Q, Q, ONE]) == UniPoly([0, 0, 3, 1])


@given(rooted_trees(max_n=8), st.sampled_from(["f0", "fne0", "fG"]))
def test_fast_path_matches_dp_and_brute_force(t, which):
    fast = f_specialize(t, which, "fast")
    assert fast == f_specialize(t, which, "dp")
    if t.n <= 6:
        assert fast == f_specialize(t, which, "brute")


@given(rooted_graphs(max_n=5), st.sampled_from(["f0", "fne0", "fG"]))
def test_symmetric_route_matches_brute_force(rg, which):
    assert f_specialize(rg, which, "sym") == f_specialize(rg, which, "brute")


@given(rooted_graphs(max_n=5))
def test_reversal_relations_hold(rg):
    assert all(x0det2_relations(rg).values())
    f0 = f_specialize(rg, "f0")
    assert f_specialize(rg, "fG") == (f0 + rev_n(f0, rg.n)).scale(2)


@given(rooted_trees(max_n=9))
def test_nested_shape_route(t):
    f, size = f0_nested(rooted_shape(t))
    assert (f, size) == (f0_tree(t), t.n)


@pytest.mark.parametrize("coeffs,p,ok", [
    ([2, 4, 1], 2, True),
    ([4, 2, 1], 2, False),
    ([2, 3, 1], 2, False),
    ([2, 4, 2], 2, False),
    ([3, 0, 0, 1], 3, True),
])
def test_eisenstein_examples(coeffs, p, ok):
    report = eisenstein(UniPoly(coeffs), p)
    assert report.satisfied is ok
    assert (report.witness is None) is ok


@pytest.mark.parametrize("f,p", [(UniPoly([2, 1]), 4), (UniPoly([Fraction(1, 2), 1]), 2), (UniPoly([2]), 2)])
def test_eisenstein_rejects_bad_input(f, p):
    with pytest.raises(ValueError):
        eisenstein(f, p)


def _irreducible(f: UniPoly) -> bool:
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(f.int_coeffs())), x, domain="QQ").is_irreducible


@given(graphs(max_n=6, connected=True))
def test_certificate(g):
    cert = irreducibility_certificate(g)
    assert cert.report.satisfied
    assert cert.M == cert.k + cert.p
    N = cert.k + cert.p - 1
    if N <= 7 and g.n <= 5:
        vals = [Q] * cert.k + [ONE] * cert.p
        assert cert.polynomial == specialize(brute_force(g, N), vals)
    assert cert.polynomial == spec_kp(g, cert.k, cert.p)
    assert _irreducible(cert.polynomial)


def test_certificate_needs_connected_graph():
    with pytest.raises(ValueError):
        irreducibility_certificate(Graph.empty(2))


@given(graphs(max_n=5, connected=True), st.integers(1, 3), st.integers(1, 3))
def test_spec_kp_matches_subset_formula_and_brute_force(g, k, p):
    f = spec_kp(g, k, p)
    assert [int(c) for c in f.coeffs] == [aj_formula(g, k, p, j) for j in range(len(f.coeffs))]
    assert f == specialize(brute_force(g, k + p - 1), [Q] * k + [ONE] * p)


@given(rooted_trees(max_n=8), st.sampled_from([2, 3, 5, 7]))
def test_x_2p_on_trees(t, p):
    f = x_2p(t, p, "ne", "dp")
    assert f.degree == t.n and f.leading_coefficient() == 1
    assert eisenstein(f, p).satisfied
    assert _irreducible(f)
    assert [int(c) for c in f.coeffs] == [aj2_formula(t, p, "ne", j) for j in range(t.n + 1)]


@given(rooted_graphs(max_n=5), st.sampled_from(["eq", "ne"]), st.integers(1, 3))
def test_x_2p_routes_agree(rg, mode, p):
    brute = x_2p(rg, p, mode, "brute")
    assert x_2p(rg, p, mode, "sym") == brute
    assert brute == specialize(brute_force(rg, p + 1, mode, 0), [Q, Q] + [ONE] * p)


@given(graphs(max_n=7))
def test_linear_coefficient_parity(g):
    assert linear_coeff_parity(g)
