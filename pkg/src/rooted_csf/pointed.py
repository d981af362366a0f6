"""Pointed chromatic symmetric functions, internal spanning trees and U-polynomials.

``P_{G,v} = sum_S (-1)^|S| p_{lambda_v^-(G_S)} z^{lambda_v^+(G_S) - 1}``.
The maps ``phi: p_k -> p_k + z^k`` and ``psi: p_k -> p_k - z^k`` relate it to
``X_0``: ``X_0 = phi(z P)``.

U, rooted U and W polynomials use their own variables ``x_1, x_2, ...``
indexed by part sizes (not colors), together with ``y`` and ``z``; they are
held in ``PartPoly`` so they cannot be mixed up with color polynomials.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .chromatic import GuardError, powersum_X, MAX_SUBSET_EDGES
from .graphs import Graph, RootedGraph, WeightedGraph, edge_subset_walk
from .symmetric import SymExpansion, ZPoly, as_partition, convert, is_monomial_positive, plus_z_powers

U_MAX_EDGES = 25
PART_NAMESPACE = "part-size"


# ---------------------------------------------------------------------------
# pointed chromatic symmetric function

def pointed_P(g: RootedGraph) -> ZPoly:
    """Pointed chromatic symmetric function, p basis, z-exponent ``lambda_v^+ - 1``."""
    if g.graph.m > MAX_SUBSET_EDGES:
        raise GuardError(f"{g.graph.m} edges exceeds the edge-subset limit of {MAX_SUBSET_EDGES}")
    acc: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for _, size, labels in edge_subset_walk(g.n, g.graph.edges):
        sizes = Counter(labels)
        plus = sizes.pop(labels[g.root])
        key = (plus - 1, as_partition(sizes.values()))
        acc[key] = acc.get(key, 0) + (-1) ** size
    return ZPoly.from_terms(((k, la, c) for (k, la), c in acc.items()), "p")


def phi_transform(x: ZPoly) -> ZPoly:
    """``p_k -> z^k + p_k``."""
    return plus_z_powers(x, +1)


def psi_transform(x: ZPoly) -> ZPoly:
    """``p_k -> -z^k + p_k``."""
    return plus_z_powers(x, -1)


def negate_z(x: ZPoly) -> ZPoly:
    """Substitute ``z -> -z``."""
    return ZPoly({k: c.scale((-1) ** k) for k, c in x.coeffs.items()}, x.basis)


def pointed_positive(g: RootedGraph) -> bool:
    """``P_{G,v}(-z)`` has nonnegative monomial coefficients."""
    flipped = negate_z(pointed_P(g))
    return all(is_monomial_positive(c) for c in flipped.coeffs.values())


# ---------------------------------------------------------------------------
# internal spanning trees

def _connected_below(n: int, edges: Sequence[Tuple[int, int]], chosen: Iterable[int], a: int, b: int) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in chosen:
        u, v = edges[i]
        parent[find(u)] = find(v)
    return find(a) == find(b)


def involution(n: int, edges: Sequence[Tuple[int, int]], s: int) -> int:
    """Sign-reversing involution on connected spanning edge sets (bitmasks).

    Scan edges in order; at the first edge ``e_j`` whose endpoints are joined
    by the edges of ``S`` smaller than ``e_j``, toggle ``e_j``.  Such an edge
    is the largest edge of a cycle in ``S`` (if present) or would close one
    (if absent).
    """
    for j, (a, b) in enumerate(edges):
        smaller = [i for i in range(j) if s >> i & 1]
        if _connected_below(n, edges, smaller, a, b):
            return s ^ (1 << j)
    return s


def _is_connected_subset(n: int, labels: List[int]) -> bool:
    return len(set(labels)) == 1 if n else True


@dataclass(frozen=True)
class SpanningTreeCounts:
    involution: int
    signed_sum: int


def internal_spanning_trees(h: Graph, order: Optional[Sequence[int]] = None) -> SpanningTreeCounts:
    """Fixed points of the involution, and the signed sum over connected spanning sets.

    ``order`` permutes the canonical edge list to give the total order used
    by the involution.
    """
    if h.n == 0 or not h.is_connected():
        raise ValueError("internal spanning trees need a nonempty connected graph")
    if h.m > MAX_SUBSET_EDGES:
        raise GuardError(f"{h.m} edges exceeds the edge-subset limit of {MAX_SUBSET_EDGES}")
    edges = list(h.edges) if order is None else [h.edges[i] for i in order]
    k = h.n - 1
    fixed = 0
    signed = 0
    for mask, size, labels in edge_subset_walk(h.n, edges):
        if not _is_connected_subset(h.n, labels):
            continue
        signed += (-1) ** (size - k)
        if involution(h.n, edges, mask) == mask:
            fixed += 1
    return SpanningTreeCounts(fixed, signed)


def internal_trees_by_activity(h: Graph, order: Optional[Sequence[int]] = None) -> int:
    """Spanning trees in which no outside edge is the largest on its fundamental cycle."""
    edges = list(h.edges) if order is None else [h.edges[i] for i in order]
    k = h.n - 1
    count = 0
    for tree in itertools.combinations(range(len(edges)), k):
        if len(_components(h.n, edges, tree)) != 1:
            continue
        tset = set(tree)
        internal = True
        for j, (a, b) in enumerate(edges):
            if j in tset:
                continue
            # fundamental cycle of e_j is entirely smaller iff a, b joined by smaller tree edges
            if _connected_below(h.n, edges, [i for i in tree if i < j], a, b):
                internal = False
                break
        count += internal
    return count


def _components(n, edges, chosen) -> set:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i in chosen:
        u, v = edges[i]
        parent[find(u)] = find(v)
    return {find(v) for v in range(n)}


def f_H(h: Graph) -> int:
    return internal_spanning_trees(h).signed_sum


# ---------------------------------------------------------------------------
# coefficient interpretation

def ans_paw_sum(g: RootedGraph, k: int) -> SymExpansion:
    """``sum_H f(H) X_{G minus H}`` over connected induced ``H`` on ``k+1`` vertices with the root."""
    graph, r = g.graph, g.root
    others = [v for v in range(graph.n) if v != r]
    total = SymExpansion("p")
    if k < 0 or k + 1 > graph.n:
        return total
    for combo in itertools.combinations(others, k):
        verts = sorted((r,) + combo)
        h = graph.induced(verts)
        if not h.is_connected():
            continue
        mask = sum(1 << v for v in verts)
        rest = graph.remove_vertices(mask)
        x_rest = powersum_X(rest) if rest.n else SymExpansion.one("p")
        total = total + x_rest.scale(f_H(h))
    return total


def ans_paw_check(g: RootedGraph, k: int) -> bool:
    """Coefficient of ``(-z)^k`` in ``P_{G,v}`` equals ``ans_paw_sum``."""
    coeff = pointed_P(g).coefficient(k).scale((-1) ** k)
    return coeff == ans_paw_sum(g, k)


# ---------------------------------------------------------------------------
# part-size polynomials

Key = Tuple[Tuple[int, ...], int, int]


class PartPoly:
    """Integer polynomial in ``x_1, x_2, ...`` (part sizes), ``y`` and ``z``.

    A term is keyed by ``(lambda, y_degree, z_degree)`` meaning
    ``x_{lambda_1} x_{lambda_2} ... y^a z^b``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, int] = None):
        clean = {}
        for (la, a, b), c in (terms or {}).items():
            if c:
                key = (as_partition(la), a, b)
                clean[key] = clean.get(key, 0) + c
        self.terms: Dict[Key, int] = {k: c for k, c in clean.items() if c}

    @classmethod
    def x(cls, parts: Iterable[int], y: int = 0, z: int = 0, c: int = 1) -> "PartPoly":
        return cls({(tuple(parts), y, z): c})

    def __add__(self, other: "PartPoly") -> "PartPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PartPoly(out)

    def __mul__(self, other: "PartPoly") -> "PartPoly":
        out: Dict[Key, int] = {}
        for (l1, a1, b1), c1 in self.terms.items():
            for (l2, a2, b2), c2 in other.terms.items():
                k = (as_partition(l1 + l2), a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return PartPoly(out)

    def times_y(self, j: int = 1) -> "PartPoly":
        return PartPoly({(la, a + j, b): c for (la, a, b), c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PartPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def y_free(self) -> bool:
        return all(a == 0 for (_, a, _) in self.terms)

    def __repr__(self):
        return f"PartPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (la, a, b), c in sorted(self.terms.items(), key=lambda t: (t[0][2], -len(t[0][0]), t[0])):
            factors = []
            for part, r in sorted(Counter(la).items()):
                factors.append(f"x{part}" + (f"^{r}" if r > 1 else ""))
            if a:
                factors.append("y" + (f"^{a}" if a > 1 else ""))
            if b:
                factors.append("z" + (f"^{b}" if b > 1 else ""))
            mono = "*".join(factors) or "1"
            if c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "namespace": PART_NAMESPACE,
            "terms": [
                {"x": list(la), "y": a, "z": b, "coeff": str(c)}
                for (la, a, b), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "PartPoly":
        if obj.get("namespace") != PART_NAMESPACE:
            raise ValueError("not a part-size polynomial")
        return cls({(tuple(t["x"]), t["y"], t["z"]): int(t["coeff"]) for t in obj["terms"]})


def _y_minus_one_power(e: int) -> List[Tuple[int, int]]:
    """``(y - 1)^e`` as ``(y_degree, coefficient)`` pairs."""
    return [(i, math.comb(e, i) * (-1) ** (e - i)) for i in range(e + 1)]


def _subset_guard(g: Graph):
    if g.m > U_MAX_EDGES:
        raise GuardError(f"{g.m} edges exceeds the U-polynomial limit of {U_MAX_EDGES}")


def u_poly(g: Graph) -> PartPoly:
    """``U_G = sum_S x_{lambda(G_S)} (y - 1)^{|S| - r(S)}``."""
    _subset_guard(g)
    acc: Dict[Key, int] = {}
    for _, size, labels in edge_subset_walk(g.n, g.edges):
        sizes = Counter(labels)
        rank = g.n - len(sizes)
        la = as_partition(sizes.values())
        for a, c in _y_minus_one_power(size - rank):
            key = (la, a, 0)
            acc[key] = acc.get(key, 0) + c
    return PartPoly(acc)


def rooted_u(g: RootedGraph) -> PartPoly:
    """``U^r = sum_S x_{lambda_v^-} z^{lambda_v^+} (y - 1)^{|S| - r(S)}``."""
    _subset_guard(g.graph)
    acc: Dict[Key, int] = {}
    for _, size, labels in edge_subset_walk(g.n, g.graph.edges):
        sizes = Counter(labels)
        rank = g.n - len(sizes)
        plus = sizes.pop(labels[g.root])
        la = as_partition(sizes.values())
        for a, c in _y_minus_one_power(size - rank):
            key = (la, a, plus)
            acc[key] = acc.get(key, 0) + c
    return PartPoly(acc)


def w_poly(wg: WeightedGraph) -> PartPoly:
    """W-polynomial by deletion-contraction on a weighted multigraph."""
    return _w(wg.weights, tuple(sorted(tuple(sorted(e)) for e in wg.edges)))


@lru_cache(maxsize=100_000)
def _w(weights: Tuple[int, ...], edges: Tuple[Tuple[int, int], ...]) -> PartPoly:
    if not edges:
        return PartPoly.x(weights)
    (u, v), rest = edges[0], edges[1:]
    if u == v:
        return _w(weights, rest).times_y()
    deleted = _w(weights, rest)
    # merge v into u, then drop v and renumber
    new_w = list(weights)
    new_w[u] += new_w[v]
    del new_w[v]

    def relabel(a: int) -> int:
        a = u if a == v else a
        return a - 1 if a > v else a

    new_edges = tuple(sorted(tuple(sorted((relabel(a), relabel(b)))) for a, b in rest))
    return deleted + _w(tuple(new_w), new_edges)


# ---------------------------------------------------------------------------
# back to symmetric functions

def _to_powersums(u: PartPoly, sign: int, use_z: bool) -> ZPoly:
    """Set ``y = 0``, ``x_i = -p_i``, multiply by ``sign``."""
    acc: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}
    for (la, a, b), c in u.terms.items():
        if a:
            continue
        if b and not use_z:
            raise ValueError("unexpected z in an unrooted U-polynomial")
        key = (b, la)
        acc[key] = acc.get(key, 0) + c * (-1) ** len(la) * sign
    return ZPoly.from_terms(((k, la, c) for (k, la), c in acc.items()), "p")


def X_from_U(u: PartPoly, n: int) -> SymExpansion:
    """``X_G = (-1)^n U_G(y = 0, x_i = -p_i)``."""
    return _to_powersums(u, (-1) ** n, False).coefficient(0)


def P_from_rootedU(ur: PartPoly, n: int) -> ZPoly:
    """``P_{G,v} = (-1)^{n+1} z^{-1} U^r(y = 0, x_i = -p_i)``."""
    x = _to_powersums(ur, (-1) ** (n + 1), True)
    if 0 in x.coeffs:
        raise ArithmeticError("rooted U-polynomial has a term free of z")
    return x.divide_z(1)


def random_edge_orders(m: int, count: int, seed: int) -> List[List[int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(m))
        rng.shuffle(perm)
        out.append(perm)
    return out
