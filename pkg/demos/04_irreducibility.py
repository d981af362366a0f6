"""Irreducibility certificates via Eisenstein's criterion."""

from __future__ import annotations

from rooted_csf import Graph, RootedGraph, eisenstein, irreducibility_certificate, x_2p
from rooted_csf.enumeration import small_graphs

# %% a connected graph: k = chromatic number, p = a prime avoiding two coefficients
cert = irreducibility_certificate(Graph.cycle(5))
print(f"C5: k={cert.k} p={cert.p}")
print("   ", cert.polynomial)
print("    Eisenstein:", cert.report.satisfied)

# %% every connected graph on at most 6 vertices
count = sum(1 for n in range(1, 7) for g in small_graphs(n, True)
            if irreducibility_certificate(g).report.satisfied)
print(f"\ncertified {count} connected graphs with at most 6 vertices")

# %% rooted trees: X_!=0 at (q, q, 1^p) is monic of degree n and Eisenstein at p
star = RootedGraph(Graph.star(3), 1)
for p in (2, 3, 5, 7):
    f = x_2p(star, p)
    print(f"p={p}: {f}  Eisenstein: {eisenstein(f, p).satisfied}")
