from __future__ import annotations

import itertools

from hypothesis import settings, strategies as st

from rooted_csf.graphs import Graph, RootedGraph

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=6, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        # attach every vertex to an earlier one so the graph is connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            if (u, v) not in edges:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


@st.composite
def rooted_graphs(draw, min_n=1, max_n=6, connected=False):
    g = draw(graphs(min_n, max_n, connected))
    return RootedGraph(g, draw(st.integers(0, g.n - 1)))


@st.composite
def trees(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


@st.composite
def rooted_trees(draw, min_n=1, max_n=9):
    t = draw(trees(min_n, max_n))
    return RootedGraph(t, draw(st.integers(0, t.n - 1)))


def naive_colorings(g: Graph, N: int):
    """Every proper coloring of ``g`` with colors 0..N, as tuples."""
    for col in itertools.product(range(N + 1), repeat=g.n):
        if all(col[u] != col[v] for u, v in g.edges):
            yield col
