from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rooted_csf.polynomial import MultiPoly, UniPoly, rev_n, specialize

ints = st.integers(-20, 20)
unipolys = st.lists(ints, max_size=6).map(UniPoly)


@given(unipolys, unipolys, ints)
def test_unipoly_ring_ops_agree_with_evaluation(f, g, x):
    assert (f + g)(x) == f(x) + g(x)
    assert (f - g)(x) == f(x) - g(x)
    assert (f * g)(x) == f(x) * g(x)


@given(unipolys, unipolys)
def test_product_degree_adds(f, g):
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree == f.degree + g.degree


def test_zero_polynomial_has_degree_minus_one():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0, 0]).is_zero()


def test_string_form():
    assert str(UniPoly([0, 2, 6, 1])) == "q^3 + 6*q^2 + 2*q"
    assert str(UniPoly([Fraction(1, 2), -1])) == "-q + 1/2"


@given(st.lists(ints, max_size=6), st.integers(0, 8))
def test_rev_n_is_an_involution_when_degree_fits(coeffs, extra):
    f = UniPoly(coeffs)
    n = max(f.degree, 0) + extra
    assert rev_n(rev_n(f, n), n) == f
    assert rev_n(f, n) == UniPoly(list(reversed(list(f.coeffs) + [0] * (n + 1 - len(f.coeffs)))))


def test_rev_n_rejects_small_n():
    with pytest.raises(ValueError):
        rev_n(UniPoly([1, 2, 3]), 1)


def test_unipoly_json_round_trip():
    f = UniPoly([Fraction(1, 3), 0, -2])
    assert UniPoly.from_json(f.to_json()) == f
    assert f.to_json() == {"var": "q", "coeffs": ["1/3", "0", "-2"]}


multipolys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), ints, max_size=5).map(lambda t: MultiPoly(3, t))
points = st.tuples(ints, ints, ints)


def _eval(p: MultiPoly, pt):
    return sum(c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] for e, c in p.terms.items())


@given(multipolys, multipolys, points)
def test_multipoly_ring_ops_agree_with_evaluation(a, b, pt):
    assert _eval(a + b, pt) == _eval(a, pt) + _eval(b, pt)
    assert _eval(a * b, pt) == _eval(a, pt) * _eval(b, pt)
    assert _eval(a - a, pt) == 0


@given(multipolys, points)
def test_specialize_to_numbers_is_evaluation(a, pt):
    assert specialize(a, list(pt)) == _eval(a, pt)


@given(multipolys, st.integers(-3, 3))
def test_specialize_to_polynomials_then_evaluate(a, x):
    vals = [UniPoly([0, 1]), UniPoly([1, 1]), UniPoly([2])]
    assert specialize(a, vals)(x) == _eval(a, (x, 1 + x, 2))


@given(multipolys)
def test_swap_and_euler(a):
    assert a.swap(0, 1).swap(0, 1) == a
    x0 = MultiPoly.var(3, 0)
    # Euler operator: x0 d/dx0 scales each monomial by its x0-degree
    assert a.euler(0) == MultiPoly(3, {e: c * e[0] for e, c in a.terms.items()})
    assert (a * x0).euler(0) == a.euler(0) * x0 + a * x0


@given(multipolys)
def test_multipoly_json_round_trip(a):
    assert MultiPoly.from_json(a.to_json()) == a


def test_multipoly_mismatched_variables():
    with pytest.raises(ValueError):
        MultiPoly(2) + MultiPoly(3)


def test_rev_n_examples():
    assert rev_n(UniPoly([0, 0, 3, 1]), 3) == UniPoly([1, 3])
    assert rev_n(UniPoly([1]), 2) == UniPoly([0, 0, 1])


def test_principal_specialization_of_three_vertex_path():
    x = MultiPoly(3, {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1, (0, 1, 2): 1,
                      (1, 1, 1): 6})
    q = UniPoly([0, 1])
    assert specialize(x, [1, q, q * q]) == UniPoly([0, 1, 2, 6, 2, 1])
