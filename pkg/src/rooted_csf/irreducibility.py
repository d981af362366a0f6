"""Univariate specializations and Eisenstein-based irreducibility certificates.

The specialization ``(q, q, 1, 1)`` gives ``f_0``, ``f_{!=0}`` and ``f_G``;
``X^{2,p}`` sets ``x_0 = x_1 = q`` and ``p`` further variables to 1;
``spec_kp`` sets ``k`` variables to ``q`` and ``p`` variables to 1.  Each has
an independent counting formula used as an oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .chromatic import (
    brute_force,
    chromatic_m,
    powersum_X,
    principal_subtrees,
    rooted_X,
    tree_chromatic_dp,
    MAX_SUBSET_EDGES,
)
from .graphs import Graph, RootedGraph, chromatic_number, chromatic_polynomial, linear_coefficient
from .polynomial import UniPoly, rev_n, specialize
from .symmetric import convert, specialize_sym

Q = UniPoly([0, 1])
ONE = UniPoly([1])
PRIME_SEARCH_LIMIT = 10 ** 4

_WHICH = {"f0": "0", "f_0": "0", "fne0": "ne0", "f_ne0": "ne0", "fG": "all", "f_G": "all"}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _primes():
    return (p for p in itertools.count(2) if is_prime(p))


# ---------------------------------------------------------------------------
# f_0, f_{!=0}, f_G

def f0_tree(t: RootedGraph) -> UniPoly:
    """``f_0`` of a rooted tree in univariate arithmetic only.

    ``f_0(T) = q prod_j f_{!=0}(T_j)`` and, since ``f_G = 2 f_0 + 2 rev_n f_0``,
    ``f_{!=0} = f_0 + 2 rev_n(f_0)`` for each subtree of size ``n``.
    """
    out = Q
    for sub in principal_subtrees(t):
        f = f0_tree(sub)
        out = out * (f + rev_n(f, sub.n).scale(2))
    return out


@lru_cache(maxsize=None)
def f0_nested(shape: tuple) -> Tuple[UniPoly, int]:
    """``(f_0, size)`` for a rooted tree given as a nested tuple of child shapes."""
    out, size = Q, 1
    for child in shape:
        f, m = f0_nested(child)
        out = out * (f + rev_n(f, m).scale(2))
        size += m
    return out, size


def f_specialize(g: RootedGraph, which: str = "f0", method: str = "auto") -> UniPoly:
    """``X_0``, ``X_{!=0}`` or ``X_G`` evaluated at ``(q, q, 1, 1)``.

    ``method`` is ``auto``, ``fast`` (trees only, via ``f0_tree``), ``dp``
    (trees only, coloring DP), ``brute`` or ``sym`` (Lambda[z] expansion).
    """
    if which not in _WHICH:
        raise ValueError(f"unknown specialization {which!r}")
    kind = _WHICH[which]
    is_tree = g.graph.is_tree()
    if method == "auto":
        method = "fast" if is_tree else "sym"
    if method == "fast":
        if not is_tree:
            raise ValueError("input graph is not a tree")
        f0 = f0_tree(g)
        r = rev_n(f0, g.n)
        if kind == "0":
            return f0
        if kind == "ne0":
            return f0 + r.scale(2)
        return (f0 + r).scale(2)
    if method == "dp":
        mode = {"0": ("eq", 0), "ne0": ("ne", 0), "all": None}[kind]
        return tree_chromatic_dp(g if mode else g.graph, [Q, Q, ONE, ONE], mode)
    if method == "brute":
        mode = {"0": "eq", "ne0": "ne", "all": "all"}[kind]
        poly = brute_force(g if kind != "all" else g.graph, 3, mode, 0)
        return specialize(poly, [Q, Q, ONE, ONE])
    if method == "sym":
        return specialize_sym(rooted_X(g, kind), [(Q, 1), (ONE, 2)], z_value=Q)
    raise ValueError(f"unknown method {method!r}")


def x0det2_relations(g: RootedGraph) -> Dict[str, bool]:
    """Check the symmetry relations among ``f_i`` and ``f_{!=i}``, ``i = 0..3``."""
    n = g.n
    vals = [Q, Q, ONE, ONE]
    f = [specialize(brute_force(g, 3, "eq", i), vals) for i in range(4)]
    fne = [specialize(brute_force(g, 3, "ne", i), vals) for i in range(4)]
    fG = specialize(brute_force(g.graph, 3), vals)
    r0, rne = rev_n(f[0], n), rev_n(fne[0], n)
    third = Fraction(1, 3)
    return {
        "a": f[0] == f[1] and f[2] == f[3] == r0,
        "b": fne[0] == fne[1] and fne[2] == fne[3] == rne,
        "c": fG == (f[0] + r0).scale(2),
        "d": fG == (fne[0] + rne).scale(Fraction(2, 3)),
        "e": f[0] == fG - fne[0] == fne[0].scale(-third) + rne.scale(2 * third),
    }


# ---------------------------------------------------------------------------
# (k, p) specialization

def _X_in_p(g: Graph):
    if g.m <= MAX_SUBSET_EDGES:
        return powersum_X(g)
    return convert(chromatic_m(g), "p")


def spec_kp(g: Graph, k: int, p: int) -> UniPoly:
    """``X_G`` with ``k`` variables equal to ``q`` and ``p`` equal to 1."""
    if k + p > 64:
        raise ValueError("k + p must be at most 64")
    return specialize_sym(_X_in_p(g), [(Q, k), (ONE, p)])


def aj_formula(g: Graph, k: int, p: int, j: int) -> int:
    """Coefficient of ``q^j``: sum over ``j``-subsets ``S`` of chi_{G|S}(k) chi_{G|S^c}(p)."""
    total = 0
    verts = range(g.n)
    for combo in itertools.combinations(verts, j):
        mask = sum(1 << v for v in combo)
        inside = chromatic_polynomial(g.induced_mask(mask))(k)
        if inside:
            outside = chromatic_polynomial(g.remove_vertices(mask))(p)
            total += inside * outside
    return int(total)


# ---------------------------------------------------------------------------
# X^{2,p}

def x_2p(g: RootedGraph, p: int, mode: str = "ne", method: str = "auto") -> UniPoly:
    """``X_0`` (mode ``eq``) or ``X_{!=0}`` (mode ``ne``) at ``x_0 = x_1 = q`` and ``p`` ones."""
    if mode not in ("eq", "ne"):
        raise ValueError(f"unknown mode {mode!r}")
    if p + 2 > 64:
        raise ValueError("p + 2 must be at most 64")
    if method == "auto":
        method = "dp" if g.graph.is_tree() else "sym"
    if method == "dp":
        return tree_chromatic_dp(g, [Q, Q] + [ONE] * p, (mode, 0))
    if method == "brute":
        return specialize(brute_force(g, p + 1, mode, 0), [Q, Q] + [ONE] * p)
    if method == "sym":
        which = "0" if mode == "eq" else "ne0"
        return specialize_sym(rooted_X(g, which), [(Q, 1), (ONE, p)], z_value=Q)
    raise ValueError(f"unknown method {method!r}")


def _independent_masks(g: Graph, within: int) -> List[int]:
    out = []
    sub = within
    while True:
        if g.is_independent(sub):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & within
    return out


def aj2_formula(g: RootedGraph, p: int, mode: str, j: int) -> int:
    """Coefficient of ``q^j`` in ``X^{2,p}`` by summing over lists ``(S_0, S_1, U)``.

    ``S_0`` and ``S_1`` are disjoint independent sets with ``|S_0| + |S_1| = j``
    (colors 0 and 1), the root is in ``S_0`` exactly in mode ``eq``, and the
    remaining vertices ``U`` are colored properly with ``p`` colors.
    """
    graph, r = g.graph, g.root
    total = 0
    for s0 in _independent_masks(graph, graph.full_mask):
        if (s0 >> r & 1) != (mode == "eq"):
            continue
        for s1 in _independent_masks(graph, graph.full_mask & ~s0):
            if bin(s0).count("1") + bin(s1).count("1") != j:
                continue
            total += chromatic_polynomial(graph.remove_vertices(s0 | s1))(p)
    return int(total)


# ---------------------------------------------------------------------------
# Eisenstein

@dataclass(frozen=True)
class EisensteinReport:
    prime: int
    satisfied: bool
    witness: Optional[str] = None
    coefficients: Tuple[int, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "satisfied": self.satisfied,
            "witness": self.witness,
            "coeffs": [str(c) for c in self.coefficients],
        }


def eisenstein(f: UniPoly, p: int) -> EisensteinReport:
    """Check Eisenstein's criterion for ``f`` at the prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not f.is_integral():
        raise ValueError("Eisenstein's criterion needs integer coefficients")
    if f.degree < 1:
        raise ValueError("Eisenstein's criterion needs positive degree")
    a = f.int_coeffs()
    n = len(a) - 1
    witness = None
    if a[n] % p == 0:
        witness = f"leading coefficient {a[n]} divisible by {p}"
    else:
        for i in range(n):
            if a[i] % p:
                witness = f"coefficient of q^{i} ({a[i]}) not divisible by {p}"
                break
        else:
            if a[0] % (p * p) == 0:
                witness = f"constant term {a[0]} divisible by {p * p}"
    return EisensteinReport(p, witness is None, witness, tuple(a))


@dataclass(frozen=True)
class Certificate:
    k: int
    p: int
    M: int
    polynomial: UniPoly
    report: EisensteinReport

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "M": self.M,
            "polynomial": self.polynomial.to_json(),
            "report": self.report.to_json(),
        }


def certificate_prime(chi_k: int, c1: int, limit: int = PRIME_SEARCH_LIMIT) -> int:
    if c1 == 0:
        raise ValueError("linear coefficient is zero; graph is disconnected")
    for p in _primes():
        if p > limit:
            raise ValueError(f"no suitable prime below {limit}")
        if chi_k % p and c1 % p:
            return p
    raise AssertionError("unreachable")


def irreducibility_certificate(g: Graph) -> Certificate:
    """Pick ``(k, p)`` and check Eisenstein for ``spec_kp(g, k, p)`` at ``p``."""
    if g.n == 0 or not g.is_connected():
        raise ValueError("certificate needs a nonempty connected graph")
    k = chromatic_number(g)
    chi = chromatic_polynomial(g)
    p = certificate_prime(int(chi(k)), linear_coefficient(g))
    f = spec_kp(g, k, p)
    return Certificate(k, p, k + p, f, eisenstein(f, p))


def linear_coeff_parity(g: Graph) -> bool:
    """Odd linear coefficient of chi_G exactly when G is connected and bipartite."""
    odd = linear_coefficient(g) % 2 == 1
    return odd == (g.n > 0 and g.is_connected() and g.is_bipartite())
