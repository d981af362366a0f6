from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rooted_csf.polynomial import MultiPoly, UniPoly, specialize
from rooted_csf.symmetric import (
    BASES,
    DegreeBoundError,
    SymExpansion,
    ZPoly,
    collect_symmetric,
    convert,
    expand_vars,
    is_e_positive,
    partitions,
    plus_z_powers,
    specialize_sym,
    split_first_variable,
)

P_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(13)] == P_COUNTS


@st.composite
def expansions(draw, basis="m", max_deg=4):
    d = draw(st.integers(0, max_deg))
    parts = list(partitions(d))
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(parts), max_size=len(parts)))
    return SymExpansion(basis, dict(zip(parts, coeffs)))


@st.composite
def zpolys(draw, basis="m"):
    return ZPoly({k: draw(expansions(basis, 3)) for k in range(draw(st.integers(0, 2)) + 1)}, basis)


def _p(k: int, nvars: int) -> MultiPoly:
    return sum((MultiPoly.var(nvars, i) ** k for i in range(nvars)), MultiPoly.zero(nvars))


def _e(k: int, nvars: int) -> MultiPoly:
    # generating function prod (1 + t x_i), read off the t^k coefficient
    from itertools import combinations

    out = MultiPoly.zero(nvars)
    for c in combinations(range(nvars), k):
        term = MultiPoly.constant(nvars, 1)
        for i in c:
            term = term * MultiPoly.var(nvars, i)
        out = out + term
    return out


@pytest.mark.parametrize("la", [(1,), (2,), (2, 1), (1, 1, 1), (3, 1), (2, 2)])
def test_single_basis_elements_expand_correctly(la):
    nv = 4
    pl = MultiPoly.constant(nv, 1)
    el = MultiPoly.constant(nv, 1)
    for part in la:
        pl = pl * _p(part, nv)
        el = el * _e(part, nv)
    assert expand_vars(SymExpansion.single("p", la), nv) == pl
    assert expand_vars(SymExpansion.single("e", la), nv) == el
    mt = expand_vars(SymExpansion.single("mt", la), nv)
    m = expand_vars(SymExpansion.single("m", la), nv)
    r = math.prod(math.factorial(v) for v in Counter(la).values())
    assert mt == m.scale(r)


@given(expansions(), st.sampled_from(BASES), st.sampled_from(BASES))
def test_conversions_round_trip(x, a, b):
    y = convert(x, a)
    assert convert(convert(y, b), a) == y
    assert convert(y, "m") == x


@given(expansions(max_deg=4), st.sampled_from(BASES))
def test_conversion_preserves_the_polynomial(x, basis):
    assert expand_vars(convert(x, basis), 4) == expand_vars(x, 4)


@given(expansions(max_deg=3), expansions(max_deg=3))
def test_product_matches_polynomial_product(x, y):
    assert expand_vars(x * y, 4) == expand_vars(x, 4) * expand_vars(y, 4)


@given(expansions(max_deg=4))
def test_collect_inverts_expand(x):
    d = max(x.degrees() or {0})
    assert collect_symmetric(expand_vars(x, max(d, 1))) == x


@given(expansions(max_deg=4))
def test_split_first_variable_matches_expansion(x):
    d = max(x.degrees() or {0})
    N = max(d, 1)
    z = split_first_variable(x)
    assert expand_vars(z, N, z_is_x0=True) == expand_vars(x, N + 1)
    assert split_first_variable(convert(x, "p")) == z


@given(zpolys("p"))
def test_plus_and_minus_z_powers_are_inverse(x):
    assert plus_z_powers(plus_z_powers(x, 1), -1) == x


@given(zpolys())
def test_zpoly_json_round_trip(x):
    assert ZPoly.from_json(x.to_json()) == x
    assert ZPoly.from_json(x.to_basis("p").to_json()) == x


def test_zpoly_json_layout():
    x = ZPoly.from_terms([(1, [2, 1], Fraction(1, 2)), (0, [1], 3)])
    assert x.to_json() == {"basis": "m", "terms": [
        {"z": 0, "partition": [1], "coeff": "3"},
        {"z": 1, "partition": [2, 1], "coeff": "1/2"},
    ]}


def test_degree_bound_is_enforced():
    with pytest.raises(DegreeBoundError):
        convert(SymExpansion.single("p", [13]), "m")


def test_e_positivity():
    assert is_e_positive(convert(SymExpansion.single("e", (2, 1)), "p"))
    assert not is_e_positive(SymExpansion.single("m", (2,)))


@given(expansions(max_deg=4), st.integers(0, 3), st.integers(0, 3))
def test_grouped_specialization_matches_substitution(x, a, b):
    q = UniPoly([0, 1])
    direct = specialize(expand_vars(x, max(a + b, 1)), [q] * a + [UniPoly([1])] * b + [0] * (max(a + b, 1) - a - b))
    assert specialize_sym(x, [(q, a), (1, b)]) == direct


def test_string_form():
    x = ZPoly.from_terms([(0, [2], 1), (0, [1, 1], -1), (1, [], -2), (2, [1], Fraction(1, 2))], "p")
    assert str(x) == "(p[2] - p[1,1]) + (-2)*z + (1/2*p[1])*z^2"
