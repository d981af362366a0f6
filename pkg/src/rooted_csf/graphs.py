"""Simple graphs, rooted graphs and weighted multigraphs.

Vertices are ``0..n-1`` and adjacency is stored as one integer bitset per
vertex.  Edges are always listed in the canonical order: lexicographic on
``(min(u, v), max(u, v))``.  An edge subset ``S`` is an integer whose bit
``i`` selects ``g.edges[i]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .polynomial import UniPoly

MAX_VERTICES = 64

Edge = Tuple[int, int]
Partition = Tuple[int, ...]


class GraphFormatError(ValueError):
    """Malformed graph text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]
    edges: Tuple[Edge, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in _bits(a):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        edges = tuple((u, w) for u in range(self.n) for w in _bits(self.adj[u] >> (u + 1) << (u + 1)))
        object.__setattr__(self, "edges", edges)

    # constructors -----------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, itertools.combinations(range(n), 2))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # queries ----------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edge_index(self, u: int, v: int) -> int:
        e = (min(u, v), max(u, v))
        try:
            return self.edges.index(e)
        except ValueError:
            raise ValueError(f"{e} is not an edge") from None

    def component_masks(self, within: Optional[int] = None) -> List[int]:
        """Connected components of the subgraph induced on ``within``."""
        rest = self.full_mask if within is None else within
        comps = []
        while rest:
            seed = rest & -rest
            comp = frontier = seed
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.adj[v] & rest & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in _bits(self.adj[v]):
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in _bits(mask))

    # derived graphs ---------------------------------------------------
    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``vertices[i] -> i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos],
        )

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(list(_bits(mask)))

    def remove_vertices(self, mask: int) -> "Graph":
        return self.induced_mask(self.full_mask & ~mask)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def contract(self, u: int, v: int) -> Tuple["Graph", List[int]]:
        """Simple-graph contraction of edge ``uv``.

        The merged vertex takes the place of ``min(u, v)``; loops and parallel
        edges are dropped.  Returns the graph and the old-to-new vertex map.
        """
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        keep, gone = min(u, v), max(u, v)
        mapping = []
        for w in range(self.n):
            if w == gone:
                mapping.append(keep)
            else:
                mapping.append(w - (w > gone))
        edges = set()
        for a, b in self.edges:
            x, y = mapping[a], mapping[b]
            if x != y:
                edges.add((min(x, y), max(x, y)))
        return Graph.from_edges(self.n - 1, edges), mapping

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph.from_edges(
            k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges]
        )

    # text format ------------------------------------------------------
    def to_text(self, root: Optional[int] = None) -> str:
        lines = [] if root is None else [f"root {root}"]
        lines.append(f"{self.n} {self.m}")
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if self.graph.n == 0:
            raise ValueError("a rooted graph must be nonempty")
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} outside 0..{self.graph.n - 1}")

    @property
    def n(self) -> int:
        return self.graph.n

    def delete_edge(self, u: int, v: int) -> "RootedGraph":
        return RootedGraph(self.graph.delete_edge(u, v), self.root)

    def contract_root_edge(self, u: int, v: int) -> "RootedGraph":
        """Contract a root edge; the merged vertex becomes the root."""
        if self.root not in (u, v):
            raise ValueError(f"edge ({u}, {v}) does not touch the root {self.root}")
        g, mapping = self.graph.contract(u, v)
        return RootedGraph(g, mapping[self.root])

    def relabel(self, perm: Sequence[int]) -> "RootedGraph":
        return RootedGraph(self.graph.relabel(perm), perm[self.root])

    def to_text(self) -> str:
        return self.graph.to_text(self.root)


@dataclass(frozen=True)
class WeightedGraph:
    """Multigraph with loops and positive integer vertex weights."""

    n: int
    edges: Tuple[Edge, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.n:
            raise ValueError("one weight per vertex required")
        if any(w < 1 for w in self.weights):
            raise ValueError("vertex weights must be positive")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @classmethod
    def unit(cls, g: Graph) -> "WeightedGraph":
        return cls(g.n, g.edges, (1,) * g.n)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}", "weights " + " ".join(map(str, self.weights))]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# edge subsets

def edge_subset(g: Graph, edges: Iterable[Edge]) -> int:
    mask = 0
    for u, v in edges:
        mask |= 1 << g.edge_index(u, v)
    return mask


def subset_components(n: int, edges: Sequence[Edge], s: int) -> List[int]:
    """Component label per vertex of the spanning subgraph ``(V, S)``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in _bits(s):
        a, b = edges[i]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(v) for v in range(n)]


def _sizes(labels: Sequence[int]) -> dict:
    sizes: dict = {}
    for lab in labels:
        sizes[lab] = sizes.get(lab, 0) + 1
    return sizes


def components_partition(g: Graph, s: int) -> Partition:
    """Component sizes of ``(V, S)`` in weakly decreasing order."""
    if s >> g.m:
        raise ValueError("edge subset selects bits beyond the edge list")
    return tuple(sorted(_sizes(subset_components(g.n, g.edges, s)).values(), reverse=True))


def rooted_split(g: RootedGraph, s: int) -> Tuple[int, Partition]:
    """Size of the root's component and the partition of the others."""
    gr = g.graph
    if s >> gr.m:
        raise ValueError("edge subset selects bits beyond the edge list")
    labels = subset_components(gr.n, gr.edges, s)
    sizes = _sizes(labels)
    root_size = sizes.pop(labels[g.root])
    return root_size, tuple(sorted(sizes.values(), reverse=True))


def edge_subset_walk(n: int, edges: Sequence[Edge]) -> Iterator[Tuple[int, int, List[int]]]:
    """Yield ``(mask, |S|, component labels)`` for every ``S`` of ``edges``.

    Depth-first over include/exclude decisions so each step costs one
    union-find merge instead of a rebuild.
    """
    m = len(edges)
    labels = list(range(n))

    def rec(i, mask, size, labels):
        if i == m:
            yield mask, size, labels
            return
        yield from rec(i + 1, mask, size, labels)
        a, b = edges[i]
        la, lb = labels[a], labels[b]
        if la == lb:
            yield from rec(i + 1, mask | 1 << i, size + 1, labels)
        else:
            merged = [la if x == lb else x for x in labels]
            yield from rec(i + 1, mask | 1 << i, size + 1, merged)

    yield from rec(0, 0, 0, labels)


def connected_spanning_subsets(g: Graph) -> Iterator[int]:
    for mask, _, labels in edge_subset_walk(g.n, g.edges):
        if len(set(labels)) == 1:
            yield mask


# ---------------------------------------------------------------------------
# independent sets, colorings, chromatic polynomial

def independent_sets(g: Graph, size: int, must_contain: Optional[int] = None,
                     must_avoid: Optional[int] = None) -> Iterator[int]:
    """Independent vertex sets (as bitmasks) of the given size."""
    verts = [v for v in range(g.n) if v != must_contain and v != must_avoid]
    need = size
    base = 0
    if must_contain is not None:
        base = 1 << must_contain
        need -= 1
        verts = [v for v in verts if not g.adj[must_contain] >> v & 1]
    if need < 0:
        return
    for combo in itertools.combinations(verts, need):
        mask = base
        for v in combo:
            mask |= 1 << v
        if g.is_independent(mask):
            yield mask


def has_proper_coloring(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    colors = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[w] for w in _bits(g.adj[v])}
        # color symmetry: only one brand-new color needs trying
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if has_proper_coloring(g, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def _falling(n: int) -> UniPoly:
    p = UniPoly([1], "x")
    for i in range(n):
        p = p * UniPoly([-i, 1], "x")
    return p


@lru_cache(maxsize=65536)
def _chi_cached(n: int, edges: Tuple[Edge, ...]) -> UniPoly:
    if not edges:
        return UniPoly.monomial(n, 1, "x")
    if len(edges) == n * (n - 1) // 2:
        return _falling(n)
    g = Graph.from_edges(n, edges)
    comps = g.component_masks()
    if len(comps) > 1:
        out = UniPoly([1], "x")
        for c in comps:
            h = g.induced_mask(c)
            out = out * _chi_cached(h.n, h.edges)
        return out
    # a pendant edge factors off as (x - 1)
    for v in range(n):
        if g.degree(v) == 1:
            h = g.remove_vertices(1 << v)
            return _chi_cached(h.n, h.edges) * UniPoly([-1, 1], "x")
    u, v = edges[-1]
    minus = g.delete_edge(u, v)
    contracted, _ = g.contract(u, v)
    return _chi_cached(n, minus.edges) - _chi_cached(contracted.n, contracted.edges)


def chromatic_polynomial(g: Graph) -> UniPoly:
    """Chromatic polynomial in ``x`` by deletion-contraction."""
    return _chi_cached(g.n, g.edges)


def linear_coefficient(g: Graph) -> int:
    return int(chromatic_polynomial(g)[1])


def count_proper_colorings(g: Graph, k: int) -> int:
    """Direct backtracking count; the independent check on ``chromatic_polynomial``."""
    order = list(range(g.n))
    colors = [-1] * g.n

    def rec(i: int) -> int:
        if i == g.n:
            return 1
        v = order[i]
        forbidden = {colors[w] for w in _bits(g.adj[v]) if colors[w] >= 0}
        total = 0
        for c in range(k):
            if c not in forbidden:
                colors[v] = c
                total += rec(i + 1)
        colors[v] = -1
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# text format

def _split_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.replace(";", "\n").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_graph_text(text: str, multigraph: bool = False):
    """Parse the graph text format.

    ::

        root 0          (optional)
        weights 3 1 1   (optional, weighted graphs only)
        3 2
        0 1
        1 2

    ``;`` may stand in for a newline, which is how ``enumerate`` writes one
    object per line.  Returns ``Graph``, ``RootedGraph`` (when a root line is
    present) or, with ``multigraph=True``, ``WeightedGraph``.
    """
    lines = _split_lines(text)
    root = None
    weights = None
    header = None
    edges: List[Edge] = []
    for lineno, line in lines:
        tok = line.split()
        if tok[0] == "root":
            if len(tok) != 2:
                raise GraphFormatError("expected 'root r'", lineno)
            root = _int(tok[1], lineno)
            continue
        if tok[0] == "weights":
            weights = [_int(t, lineno) for t in tok[1:]]
            continue
        if len(tok) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        a, b = _int(tok[0], lineno), _int(tok[1], lineno)
        if header is None:
            header = (a, b, lineno)
        else:
            if header and not (0 <= a < header[0] and 0 <= b < header[0]):
                raise GraphFormatError(f"edge ({a}, {b}) outside 0..{header[0] - 1}", lineno)
            if a == b and not multigraph:
                raise GraphFormatError(f"self-loop at {a}", lineno)
            edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m, hline = header
    if not 0 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 0..{MAX_VERTICES}", hline)
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}", hline)
    if multigraph:
        return WeightedGraph(n, tuple(edges), tuple(weights) if weights else (1,) * n)
    if weights is not None:
        raise GraphFormatError("weights are only meaningful for weighted graphs")
    if len(set((min(a, b), max(a, b)) for a, b in edges)) != len(edges):
        raise GraphFormatError("repeated edge in a simple graph")
    g = Graph.from_edges(n, edges)
    if root is not None:
        if not 0 <= root < n:
            raise GraphFormatError(f"root {root} outside 0..{n - 1}")
        return RootedGraph(g, root)
    return g


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"not an integer: {tok!r}", lineno) from None


def one_line(text: str) -> str:
    return "; ".join(text.strip().splitlines())
