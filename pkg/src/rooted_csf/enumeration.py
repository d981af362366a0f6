"""Unlabeled rooted trees, free trees, small graphs and small posets.

Rooted trees come from canonical level sequences (each successor is the next
sequence in reverse-lex order, so every isomorphism class appears once).
Free trees are built around their centroid.  Graphs and posets are built by
adding one vertex at a time and deduplicating with a canonical form from
partition refinement plus individualization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graphs import Graph, GraphFormatError, RootedGraph, _bits, _split_lines, _int

MAX_ROOTED_TREE_N = 20
MAX_FREE_TREE_N = 18
MAX_GRAPH_N = 7
MAX_POSET_N = 6

Shape = Tuple  # nested tuple of child shapes, children sorted


def _check_range(n: int, lo: int, hi: int, what: str):
    if not lo <= n <= hi:
        raise ValueError(f"{what} supported for {lo} <= n <= {hi}, got {n}")


# ---------------------------------------------------------------------------
# rooted trees

@dataclass(frozen=True)
class RootedTree:
    """Unlabeled rooted tree stored as its canonical level sequence."""

    levels: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.levels)

    def parents(self) -> List[int]:
        last: Dict[int, int] = {}
        out = [-1]
        last[0] = 0
        for i in range(1, self.n):
            out.append(last[self.levels[i] - 1])
            last[self.levels[i]] = i
        return out

    def to_rooted_graph(self) -> RootedGraph:
        par = self.parents()
        return RootedGraph(Graph.from_edges(self.n, [(par[i], i) for i in range(1, self.n)]), 0)

    def shape(self) -> Shape:
        return rooted_shape(self.to_rooted_graph())


def rooted_trees(n: int) -> Iterator[RootedTree]:
    """One canonical level sequence per rooted tree on ``n`` vertices."""
    _check_range(n, 1, MAX_ROOTED_TREE_N, "rooted_trees")
    levels = list(range(n))
    while True:
        yield RootedTree(tuple(levels))
        p = max((i for i in range(n) if levels[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        gap = p - q
        for i in range(p, n):
            levels[i] = levels[i - gap]


def rooted_shape(t: RootedGraph) -> Shape:
    """Canonical nested-tuple form (sorted child shapes)."""
    g = t.graph
    if not g.is_tree():
        raise ValueError("input graph is not a tree")

    def rec(v: int, parent: int) -> Shape:
        return tuple(sorted(rec(w, v) for w in _bits(g.adj[v]) if w != parent))

    return rec(t.root, -1)


def shape_size(shape: Shape) -> int:
    return 1 + sum(shape_size(c) for c in shape)


def shape_to_rooted_graph(shape: Shape) -> RootedGraph:
    edges = []
    counter = [0]

    def rec(s: Shape) -> int:
        me = counter[0]
        counter[0] += 1
        for child in s:
            c = rec(child)
            edges.append((me, c))
        return me

    rec(shape)
    return RootedGraph(Graph.from_edges(counter[0], edges), 0)


def rooted_iso(a: RootedGraph, b: RootedGraph) -> bool:
    return rooted_shape(a) == rooted_shape(b)


def rooted_iso_bruteforce(a: RootedGraph, b: RootedGraph) -> bool:
    """Search all bijections; exponential, for cross-checks only."""
    if a.n != b.n or a.graph.m != b.graph.m:
        return False
    others_a = [v for v in range(a.n) if v != a.root]
    others_b = [v for v in range(b.n) if v != b.root]
    for perm in itertools.permutations(others_b):
        f = {a.root: b.root, **dict(zip(others_a, perm))}
        if all(b.graph.has_edge(f[u], f[v]) for u, v in a.graph.edges):
            return True
    return False


def naive_rooted_shapes(n: int) -> set:
    """Grow by adding a leaf everywhere and deduplicating."""
    _check_range(n, 1, MAX_ROOTED_TREE_N, "naive_rooted_shapes")
    layer = {()}
    for _ in range(n - 1):
        nxt = set()
        for shape in layer:
            rg = shape_to_rooted_graph(shape)
            for v in range(rg.n):
                edges = list(rg.graph.edges) + [(v, rg.n)]
                nxt.add(rooted_shape(RootedGraph(Graph.from_edges(rg.n + 1, edges), 0)))
        layer = nxt
    return layer


# ---------------------------------------------------------------------------
# free trees

def tree_centers(g: Graph) -> List[int]:
    """Center vertices (one or two) by repeatedly removing leaves."""
    if not g.is_tree():
        raise ValueError("input graph is not a tree")
    deg = [g.degree(v) for v in range(g.n)]
    remaining = g.n
    layer = [v for v in range(g.n) if deg[v] <= 1]
    removed = [False] * g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in _bits(g.adj[v]):
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(g.n) if not removed[v]]


def free_tree_canonical(g: Graph) -> Shape:
    """Isomorphism-invariant form: least rooted shape over the centers."""
    return min(rooted_shape(RootedGraph(g, c)) for c in tree_centers(g))


def _max_branch(t: RootedTree) -> int:
    sizes = [0] * t.n
    par = t.parents()
    for i in range(t.n - 1, 0, -1):
        sizes[i] += 1
        sizes[par[i]] += sizes[i]
    return max((sizes[i] for i in range(1, t.n) if par[i] == 0), default=0)


def free_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class, generated around the centroid.

    Trees with one centroid are rooted trees whose root branches all have
    fewer than ``n / 2`` vertices; trees with two centroids join two rooted
    trees on ``n / 2`` vertices by their roots (unordered pair).
    """
    _check_range(n, 1, MAX_FREE_TREE_N, "free_trees")
    for t in rooted_trees(n):
        if 2 * _max_branch(t) < n:
            yield t.to_rooted_graph().graph
    if n % 2 == 0:
        half = [t.to_rooted_graph().graph for t in rooted_trees(n // 2)]
        h = n // 2
        for i, j in itertools.combinations_with_replacement(range(len(half)), 2):
            edges = list(half[i].edges) + [(u + h, v + h) for u, v in half[j].edges] + [(0, h)]
            yield Graph.from_edges(n, edges)


def naive_free_tree_forms(n: int) -> set:
    _check_range(n, 1, MAX_FREE_TREE_N, "naive_free_tree_forms")
    layer = {Graph.empty(1)}
    forms = {free_tree_canonical(Graph.empty(1))}
    for size in range(1, n):
        nxt: Dict[Shape, Graph] = {}
        for g in layer:
            for v in range(size):
                h = Graph.from_edges(size + 1, list(g.edges) + [(v, size)])
                nxt.setdefault(free_tree_canonical(h), h)
        layer = list(nxt.values())
        forms = set(nxt)
    return forms


def prufer_decode(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def rooted_orbit_count(g: Graph) -> int:
    """Number of vertices of a tree up to automorphism."""
    return len({rooted_shape(RootedGraph(g, v)) for v in range(g.n)})


# ---------------------------------------------------------------------------
# canonical form for small (di)graphs

def _refine(n: int, out: Sequence[int], inn: Sequence[int], colors: List[int]) -> List[int]:
    while True:
        sigs = [
            (colors[v],
             tuple(sorted(colors[w] for w in _bits(out[v]))),
             tuple(sorted(colors[w] for w in _bits(inn[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _twins(out, inn, cell: List[int]) -> bool:
    for u, v in itertools.combinations(cell, 2):
        mask = ~((1 << u) | (1 << v))
        if out[u] & mask != out[v] & mask or inn[u] & mask != inn[v] & mask:
            return False
        if (out[u] >> v & 1) != (out[v] >> u & 1):
            return False
    return True


def canonical_digraph(n: int, out: Sequence[int], colors: Optional[Sequence[int]] = None) -> Tuple:
    """Relabeling-invariant code of a digraph given by out-neighbor bitmasks.

    ``colors`` optionally fixes a vertex coloring that isomorphisms must
    respect (used to pin a root).
    """
    inn = [0] * n
    for v in range(n):
        for w in _bits(out[v]):
            inn[w] |= 1 << v
    start = _refine(n, out, inn, list(colors) if colors is not None else [0] * n)

    best: List[Optional[Tuple]] = [None]

    def search(col: List[int]):
        cells: Dict[int, List[int]] = {}
        for v in range(n):
            cells.setdefault(col[v], []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(n), key=lambda v: col[v])
            pos = {v: i for i, v in enumerate(order)}
            code = tuple(sum(1 << pos[w] for w in _bits(out[v])) for v in order)
            if best[0] is None or code > best[0]:
                best[0] = code
            return
        choices = target[:1] if _twins(out, inn, target) else target
        for v in choices:
            ind = [2 * c + (0 if w == v else 1) for w, c in enumerate(col)]
            search(_refine(n, out, inn, ind))

    search(start)
    head = tuple(sorted(colors)) if colors is not None else ()
    return (n, head, best[0])


def canonical_graph(g: Graph) -> Tuple:
    return canonical_digraph(g.n, g.adj)


def canonical_rooted_graph(g: RootedGraph) -> Tuple:
    colors = [0 if v == g.root else 1 for v in range(g.n)]
    return canonical_digraph(g.n, g.graph.adj, colors)


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    return canonical_graph(a) == canonical_graph(b)


# ---------------------------------------------------------------------------
# small graphs

@lru_cache(maxsize=None)
def _all_graphs(n: int) -> Tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    found: Dict[Tuple, Graph] = {}
    for g in _all_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            edges = list(g.edges) + [(v, n - 1) for v in _bits(nbrs)]
            h = Graph.from_edges(n, edges)
            found.setdefault(canonical_graph(h), h)
    return tuple(found[k] for k in sorted(found))


def small_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices."""
    _check_range(n, 0, MAX_GRAPH_N, "small_graphs")
    for g in _all_graphs(n):
        if not connected_only or (g.n > 0 and g.is_connected()):
            yield g


def rooted_graphs(n: int, connected_only: bool = True) -> Iterator[RootedGraph]:
    """One rooted graph per isomorphism class (roots up to automorphism)."""
    for g in small_graphs(n, connected_only):
        seen = set()
        for r in range(g.n):
            rg = RootedGraph(g, r)
            key = canonical_rooted_graph(rg)
            if key not in seen:
                seen.add(key)
                yield rg


# ---------------------------------------------------------------------------
# posets

@dataclass(frozen=True)
class Poset:
    """Strict order on ``0..n-1``; ``up[i]`` is the bitmask of ``j`` with ``i < j``."""

    n: int
    up: Tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise ValueError("one row per element required")
        for i in range(self.n):
            if self.up[i] >> i & 1:
                raise ValueError(f"relation is not irreflexive at {i}")
            for j in _bits(self.up[i]):
                if self.up[j] & ~self.up[i]:
                    raise ValueError(f"relation is not transitive through {i} < {j}")

    @classmethod
    def from_relations(cls, n: int, pairs) -> "Poset":
        """Transitive closure of ``a < b`` pairs; cycles are rejected."""
        up = [0] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"pair ({a}, {b}) outside 0..{n - 1}")
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(n):
                new = up[i]
                for j in _bits(up[i]):
                    new |= up[j]
                if new != up[i]:
                    up[i] = new
                    changed = True
        if any(up[i] >> i & 1 for i in range(n)):
            raise ValueError("relations contain a cycle")
        return cls(n, tuple(up))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, (0,) * n)

    def less(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.less(a, b) or self.less(b, a)

    def relations(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.up[i])]

    def remove(self, r: int) -> "Poset":
        keep = [v for v in range(self.n) if v != r]
        pos = {v: i for i, v in enumerate(keep)}
        return Poset(len(keep), tuple(sum(1 << pos[w] for w in _bits(self.up[v]) if w != r) for v in keep))

    def to_text(self) -> str:
        rel = self.relations()
        return "\n".join(["poset", f"{self.n} {len(rel)}"] + [f"{a} {b}" for a, b in rel]) + "\n"


def parse_poset_text(text: str) -> Poset:
    """Parse ``poset`` / ``n m`` / ``m`` lines ``a b`` meaning ``a < b``."""
    lines = _split_lines(text)
    if lines and lines[0][1] == "poset":
        lines = lines[1:]
    if not lines:
        raise GraphFormatError("missing 'n m' header")
    lineno, head = lines[0]
    tok = head.split()
    if len(tok) != 2:
        raise GraphFormatError("expected 'n m' header", lineno)
    n, m = _int(tok[0], lineno), _int(tok[1], lineno)
    pairs = []
    for lineno, line in lines[1:]:
        tok = line.split()
        if len(tok) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        pairs.append((_int(tok[0], lineno), _int(tok[1], lineno)))
    if len(pairs) != m:
        raise GraphFormatError(f"header declares {m} relations, found {len(pairs)}", lines[0][0])
    try:
        return Poset.from_relations(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def canonical_poset(p: Poset) -> Tuple:
    return canonical_digraph(p.n, p.up)


def _down_sets(p: Poset) -> Iterator[int]:
    down = [0] * p.n
    for i in range(p.n):
        for j in _bits(p.up[i]):
            down[j] |= 1 << i
    for mask in range(1 << p.n):
        if all(down[v] & ~mask == 0 for v in _bits(mask)):
            yield mask


@lru_cache(maxsize=None)
def _all_posets(n: int) -> Tuple[Poset, ...]:
    if n == 0:
        return (Poset(0, ()),)
    found: Dict[Tuple, Poset] = {}
    for p in _all_posets(n - 1):
        for below in _down_sets(p):
            # the new element n-1 is maximal and lies above exactly `below`
            up = tuple(row | (1 << (n - 1)) if below >> i & 1 else row for i, row in enumerate(p.up)) + (0,)
            q = Poset(n, up)
            found.setdefault(canonical_poset(q), q)
    return tuple(found[k] for k in sorted(found))


def posets(n: int) -> Iterator[Poset]:
    """One poset per isomorphism class on ``n`` elements."""
    _check_range(n, 0, MAX_POSET_N, "posets")
    yield from _all_posets(n)


def naive_poset_forms(n: int) -> set:
    """Every transitive strict order on ``n`` labeled elements, deduplicated."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    forms = set()
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        up = [0] * n
        for (i, j), b in zip(pairs, bits):
            if b:
                up[i] |= 1 << j
        ok = all(not (up[j] >> i & 1) for i in range(n) for j in _bits(up[i]))
        ok = ok and all(up[j] & ~up[i] == 0 for i in range(n) for j in _bits(up[i]))
        if ok:
            forms.add(canonical_poset(Poset(n, tuple(up))))
    return forms


def is_31_free(p: Poset) -> bool:
    """No chain ``a < b < c`` with a fourth element incomparable to all three."""
    for a in range(p.n):
        for b in _bits(p.up[a]):
            for c in _bits(p.up[b]):
                for d in range(p.n):
                    if d in (a, b, c):
                        continue
                    if not (p.comparable(d, a) or p.comparable(d, b) or p.comparable(d, c)):
                        return False
    return True


def incomparability_graph(p: Poset) -> Graph:
    return Graph.from_edges(
        p.n, [(a, b) for a, b in itertools.combinations(range(p.n), 2) if not p.comparable(a, b)]
    )
