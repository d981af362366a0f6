"""Chromatic symmetric functions of graphs and rooted graphs.

Colors are ``0..N``; a proper coloring contributes ``prod_v x_{color(v)}``.
For a rooted graph ``X_i`` restricts the root to color ``i`` and ``X_{!=i}``
forbids it.  Several independent routes are provided so that each can check
the others:

* ``brute_force``            enumerate colorings (vectorized)
* ``x0_tree_recursion``      root times product of subtree ``X_{!=0}``
* ``x0_deletion_contraction``  ``X_0(G) = X_0(G - e) - x_0 X_0(G / e)``
* ``powersum_X``, ``powersum_X0``  alternating sums over edge subsets
* ``chromatic_m``            counts stable partitions (monomial expansion)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .graphs import (
    Graph,
    RootedGraph,
    _bits,
    edge_subset_walk,
    independent_sets,
)
from .polynomial import MultiPoly, UniPoly
from .symmetric import (
    SymExpansion,
    ZPoly,
    as_partition,
    convert,
    expand_vars,
    split_first_variable,
    plus_z_powers,
)

#: Upper bound on ``(N + 1) ** n`` for brute-force enumeration.
BRUTE_FORCE_LIMIT = 10 ** 8
#: Upper bound on the edge count for edge-subset sums.
MAX_SUBSET_EDGES = 30

_CHUNK_ROWS = 1 << 20


class GuardError(RuntimeError):
    """A computation would exceed one of the configured size guards."""


def _as_graph(g) -> Tuple[Graph, Optional[int]]:
    if isinstance(g, RootedGraph):
        return g.graph, g.root
    return g, None


def _subset_guard(g: Graph):
    if g.m > MAX_SUBSET_EDGES:
        raise GuardError(f"{g.m} edges exceeds the edge-subset limit of {MAX_SUBSET_EDGES}")


# ---------------------------------------------------------------------------
# brute force

def brute_force(g, N: int, mode: str = "all", color: int = 0) -> MultiPoly:
    """Sum of coloring weights over all proper colorings with colors ``0..N``.

    ``mode`` is ``"all"``, ``"eq"`` (root gets ``color``) or ``"ne"`` (root
    avoids ``color``).  The result has ``N + 1`` variables, ``x_i`` at index i.
    """
    graph, root = _as_graph(g)
    if mode not in ("all", "eq", "ne"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode != "all" and root is None:
        raise ValueError("rooted modes need a RootedGraph")
    if not 0 <= color <= N:
        raise ValueError(f"color {color} outside 0..{N}")
    n, C = graph.n, N + 1
    if C ** n > BRUTE_FORCE_LIMIT:
        raise GuardError(f"(N+1)^n = {C}^{n} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    if n == 0:
        return MultiPoly.constant(C, 1)

    # BFS order from the root keeps conflicts close to the front
    start = root if root is not None else 0
    order: List[int] = []
    seen = 0
    for s in [start] + list(range(n)):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in _bits(graph.adj[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[w] for w in _bits(graph.adj[v]) if pos[w] < pos[v]] for v in order]

    if root is None or mode == "all":
        first = np.arange(C, dtype=np.int8)
    elif mode == "eq":
        first = np.array([color], dtype=np.int8)
    else:
        first = np.array([c for c in range(C) if c != color], dtype=np.int8)

    base = n + 1
    use_key = base ** C < 2 ** 62
    acc: Dict = {}

    def record(rows: np.ndarray):
        if use_key:
            weights = np.array([base ** c for c in range(C)], dtype=np.int64)
            keys = weights[rows.astype(np.int64)].sum(axis=1)
            uniq, cnt = np.unique(keys, return_counts=True)
            for k, c in zip(uniq.tolist(), cnt.tolist()):
                acc[k] = acc.get(k, 0) + c
        else:
            counts = np.stack([(rows == c).sum(axis=1) for c in range(C)], axis=1)
            uniq, cnt = np.unique(counts, axis=0, return_counts=True)
            for k, c in zip(map(tuple, uniq.tolist()), cnt.tolist()):
                acc[k] = acc.get(k, 0) + c

    def extend(rows: np.ndarray, i: int):
        while i < n:
            if len(rows) * C > _CHUNK_ROWS and len(rows) > 1:
                half = len(rows) // 2
                extend(rows[:half], i)
                extend(rows[half:], i)
                return
            r = len(rows)
            new = np.repeat(rows, C, axis=0)
            col = np.tile(np.arange(C, dtype=np.int8), r)
            ok = np.ones(len(new), dtype=bool)
            for j in earlier[i]:
                ok &= new[:, j] != col
            rows = np.concatenate([new[ok], col[ok, None]], axis=1)
            i += 1
            if len(rows) == 0:
                return
        record(rows)

    extend(first[:, None], 1)

    terms = {}
    for k, c in acc.items():
        if use_key:
            e = []
            for _ in range(C):
                k, d = divmod(k, base)
                e.append(d)
            terms[tuple(e)] = c
        else:
            terms[k] = c
    return MultiPoly(C, terms)


# ---------------------------------------------------------------------------
# stable partitions -> monomial expansion

def _stable_partition_types(g: Graph) -> Dict[Tuple[int, ...], int]:
    """Number of partitions of V into independent sets, by block-size type."""

    @lru_cache(maxsize=None)
    def f(mask: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        if mask == 0:
            return (((), 1),)
        low = mask & -mask
        v = low.bit_length() - 1
        cand = [w for w in _bits(mask & ~low & ~g.adj[v])]
        out: Dict[Tuple[int, ...], int] = {}

        def blocks(i: int, block: int, size: int):
            if i == len(cand):
                for la, c in f(mask & ~block):
                    key = as_partition(la + (size,))
                    out[key] = out.get(key, 0) + c
                return
            blocks(i + 1, block, size)
            w = cand[i]
            if not g.adj[w] & block:
                blocks(i + 1, block | 1 << w, size + 1)

        blocks(0, low, 1)
        return tuple(out.items())

    return dict(f(g.full_mask))


def chromatic_m(g: Graph) -> SymExpansion:
    """``X_G`` in the monomial basis: each stable partition gives ``mt_type``."""
    if g.n == 0:
        return SymExpansion.one("m")
    return convert(SymExpansion("mt", _stable_partition_types(g)), "m")


def chromatic_X(g: Graph, basis: str = "m") -> SymExpansion:
    return convert(chromatic_m(g), basis)


# ---------------------------------------------------------------------------
# deletion-contraction

@lru_cache(maxsize=200_000)
def _x0_dc(g: RootedGraph) -> ZPoly:
    r = g.root
    nbrs = g.graph.adj[r]
    if not nbrs:
        rest = g.graph.remove_vertices(1 << r)
        return split_first_variable(chromatic_m(rest)).times_z(1)
    # smallest canonical edge touching the root
    s = min(_bits(nbrs))
    deleted = _x0_dc(g.delete_edge(r, s))
    contracted = _x0_dc(g.contract_root_edge(r, s))
    return deleted - contracted.times_z(1)


def x0_deletion_contraction_sym(g: RootedGraph) -> ZPoly:
    """``X_0`` as an element of Lambda[z] (monomial basis), by deletion-contraction."""
    return _x0_dc(g)


def x0_deletion_contraction(g: RootedGraph, N: int) -> MultiPoly:
    return expand_vars(_x0_dc(g), N, z_is_x0=True)


def rooted_X(g: RootedGraph, which: str = "0") -> ZPoly:
    """Rooted invariants in Lambda[z], monomial basis.

    ``which`` is ``"0"`` for ``X_0``, ``"ne0"`` for ``X_{!=0}`` and ``"all"``
    for ``X_G`` viewed with ``z = x_0``.
    """
    if which == "0":
        return _x0_dc(g)
    full = split_first_variable(chromatic_m(g.graph))
    if which == "all":
        return full
    if which == "ne0":
        return full - _x0_dc(g)
    raise ValueError(f"unknown invariant {which!r}")


# ---------------------------------------------------------------------------
# rooted tree recursion

def _tree_children(g: Graph, root: int) -> Dict[int, List[int]]:
    children: Dict[int, List[int]] = {root: []}
    stack = [root]
    parent = {root: -1}
    while stack:
        v = stack.pop()
        for w in _bits(g.adj[v]):
            if w != parent[v]:
                parent[w] = v
                children[v].append(w)
                children[w] = []
                stack.append(w)
    return children


def principal_subtrees(t: RootedGraph) -> List[RootedGraph]:
    """The rooted subtrees hanging from the root's children."""
    if not t.graph.is_tree():
        raise ValueError("input graph is not a tree")
    children = _tree_children(t.graph, t.root)
    out = []
    for c in children[t.root]:
        verts = []
        stack = [c]
        while stack:
            v = stack.pop()
            verts.append(v)
            stack.extend(children[v])
        verts.sort()
        out.append(RootedGraph(t.graph.induced(verts), verts.index(c)))
    return out


def x0_tree_recursion_sym(t: RootedGraph) -> ZPoly:
    """``X_0(T) = z * prod_j X_{!=0}(T_j)`` with ``X_{!=0} = X - X_0``; p basis."""
    if not t.graph.is_tree():
        raise ValueError("input graph is not a tree")
    result = ZPoly({1: SymExpansion.one("p")}, "p")
    for sub in principal_subtrees(t):
        x_all = split_first_variable(powersum_X(sub.graph))
        result = result * (x_all - x0_tree_recursion_sym(sub))
    return result


def x0_tree_recursion(t: RootedGraph, N: int) -> MultiPoly:
    return expand_vars(x0_tree_recursion_sym(t), N, z_is_x0=True)


# ---------------------------------------------------------------------------
# power-sum expansions

def powersum_X(g: Graph) -> SymExpansion:
    """``X_G = sum_S (-1)^|S| p_{lambda(G_S)}``."""
    _subset_guard(g)
    acc: Dict[Tuple[int, ...], int] = {}
    for _, size, labels in edge_subset_walk(g.n, g.edges):
        counts: Dict[int, int] = {}
        for lab in labels:
            counts[lab] = counts.get(lab, 0) + 1
        la = tuple(sorted(counts.values(), reverse=True))
        acc[la] = acc.get(la, 0) + (-1) ** size
    return SymExpansion("p", acc)


def powersum_X0(g: RootedGraph, include_x0: bool = True) -> ZPoly:
    """Power-sum expansion of ``X_0``.

    Returns ``sum_S (-1)^|S| p_{lambda_v^-} z^{lambda_v^+}`` where each
    ``p_k`` is read over ``x_0, x_1, ...`` (expand with
    ``powersums_include_x0=True``).  With ``include_x0=False`` the result is
    rewritten into Lambda[z], where ``p_k`` ranges over ``x_1, ...`` only, by
    sending ``p_k -> p_k + z^k``.
    """
    _subset_guard(g.graph)
    acc: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for _, size, labels in edge_subset_walk(g.n, g.graph.edges):
        counts: Dict[int, int] = {}
        for lab in labels:
            counts[lab] = counts.get(lab, 0) + 1
        k = counts.pop(labels[g.root])
        key = (k, tuple(sorted(counts.values(), reverse=True)))
        acc[key] = acc.get(key, 0) + (-1) ** size
    raw = ZPoly.from_terms(((k, la, c) for (k, la), c in acc.items()), "p")
    return raw if include_x0 else plus_z_powers(raw, +1)


# ---------------------------------------------------------------------------
# coefficients of z^k

def coeff_zk(g: RootedGraph, k: int, mode: str = "root-in") -> SymExpansion:
    """Sum of ``X_{G-A}`` over ``k``-element independent sets ``A``.

    ``root-in`` requires the root in ``A`` (coefficient of ``x_0^k`` in
    ``X_0``); ``root-out`` forbids it (coefficient in ``X_{!=0}``).
    """
    if mode == "root-in":
        sets = independent_sets(g.graph, k, must_contain=g.root) if k >= 1 else iter(())
    elif mode == "root-out":
        sets = independent_sets(g.graph, k, must_avoid=g.root)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    total = SymExpansion("m")
    for a in sets:
        rest = g.graph.remove_vertices(a)
        part = convert(powersum_X(rest), "m") if rest.n else SymExpansion.one("m")
        total = total + part
    return total


# ---------------------------------------------------------------------------
# identities on explicit polynomials

def apply_transposition(p: MultiPoly, i: int, j: int) -> MultiPoly:
    return p.swap(i, j)


def recover_X_from_Xne0(xne0: MultiPoly, N: int) -> MultiPoly:
    """``X = (1/N) sum_{i=0}^N (0,i) . X_{!=0}``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    total = MultiPoly.zero(xne0.nvars)
    for i in range(N + 1):
        total = total + xne0.swap(0, i)
    return total / N


def x0_from_xne0(xne0: MultiPoly, N: int) -> MultiPoly:
    """Recover ``X_0`` from ``X_{!=0}`` alone."""
    x0 = recover_X_from_Xne0(xne0, N) - xne0
    if not x0.is_integral():
        raise ArithmeticError("recovered X_0 is not integral")
    return x0


def pointing_sum(g: Graph, N: int) -> MultiPoly:
    total = MultiPoly.zero(N + 1)
    for r in range(g.n):
        total = total + brute_force(RootedGraph(g, r), N, "eq", 0)
    return total


def pointing_check(g: Graph, N: int) -> bool:
    """``x_0 d/dx_0 X_G == sum_r X_0(G rooted at r)``."""
    return brute_force(g, N).euler(0) == pointing_sum(g, N)


# ---------------------------------------------------------------------------
# tree DP for univariate substitutions

Value = Union[int, Fraction, UniPoly]


def _coeff_array(v, dtype):
    if isinstance(v, UniPoly):
        cs = v.coeffs or (Fraction(0),)
    else:
        cs = (Fraction(v),)
    if dtype is object:
        return np.array([c if c.denominator != 1 else int(c) for c in cs], dtype=object)
    return np.array([int(c) for c in cs], dtype=np.int64)


def tree_chromatic_dp(t, values: Sequence[Value], root_mode: Optional[Tuple[str, int]] = None,
                      var: str = "q") -> UniPoly:
    """Sum over proper colorings of a tree of ``prod_v values[color(v)]``.

    ``values[c]`` is the image of ``x_c``.  ``root_mode`` optionally restricts
    the root: ``("eq", i)`` or ``("ne", i)``; ``t`` must then be rooted.
    Works bottom-up: a vertex colored ``c`` contributes ``values[c]`` times,
    for each child, the child's total over colors other than ``c``.
    """
    graph, root = _as_graph(t)
    if not graph.is_tree():
        raise ValueError("input graph is not a tree")
    if root is None:
        if root_mode is not None:
            raise ValueError("root_mode needs a RootedGraph")
        root = 0
    C = len(values)
    n = graph.n
    # int64 is safe when every coloring-sum coefficient is provably small
    all_int = all(
        (isinstance(v, UniPoly) and v.is_integral() and all(c >= 0 for c in v.coeffs))
        or (not isinstance(v, UniPoly) and Fraction(v).denominator == 1 and v >= 0)
        for v in values
    )
    if all_int:
        mass = sum(sum(v.coeffs) if isinstance(v, UniPoly) else v for v in values)
        dtype = np.int64 if mass ** n < 2 ** 62 else object
    else:
        dtype = object
    vals = [_coeff_array(v, dtype) for v in values]
    children = _tree_children(graph, root)

    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])

    table: Dict[int, List[np.ndarray]] = {}
    for v in reversed(order):
        per_color = [vals[c] for c in range(C)]
        for u in children[v]:
            child = table.pop(u)
            width = max(len(a) for a in child)
            total = np.zeros(width, dtype=dtype)
            for a in child:
                total[: len(a)] += a
            nxt = []
            for c in range(C):
                other = total.copy()
                other[: len(child[c])] -= child[c]
                nxt.append(np.convolve(per_color[c], other))
            per_color = nxt
        table[v] = per_color

    rows = table[root]
    if root_mode is None:
        allowed = range(C)
    elif root_mode[0] == "eq":
        allowed = [root_mode[1]]
    elif root_mode[0] == "ne":
        allowed = [c for c in range(C) if c != root_mode[1]]
    else:
        raise ValueError(f"unknown root mode {root_mode!r}")
    width = max(len(rows[c]) for c in range(C))
    out = np.zeros(width, dtype=dtype)
    for c in allowed:
        out[: len(rows[c])] += rows[c]
    return UniPoly([Fraction(int(c)) if dtype is not object else Fraction(c) for c in out.tolist()], var)
