"""Specializing X_0 at (q, q, 1, 1) separates rooted trees.

The fast path multiplies univariate polynomials over the principal
subtrees, so every rooted tree up to 12 vertices takes seconds.
"""

from __future__ import annotations

import time

from rooted_csf import RootedGraph, Graph, f_specialize
from rooted_csf.enumeration import rooted_trees
from rooted_csf.irreducibility import f0_tree

# %% a single example
end = RootedGraph(Graph.path(3), 0)
print("f_0(P3 rooted at an end) =", f_specialize(end, "f0"))
print("f_!=0                    =", f_specialize(end, "fne0"))

# %% sweep
start = time.perf_counter()
seen = {}
total = 0
for n in range(1, 13):
    for t in rooted_trees(n):
        key = tuple(f0_tree(t.to_rooted_graph()).coeffs)
        seen.setdefault(key, []).append(t.levels)
        total += 1
clashes = [v for v in seen.values() if len(v) > 1]
print(f"\n{total} rooted trees, {len(seen)} distinct f_0 values, {len(clashes)} clashes "
      f"({time.perf_counter() - start:.1f}s)")
