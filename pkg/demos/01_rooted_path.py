"""Rooted chromatic functions of the 3-vertex path.

Run with ``python3 demos/01_rooted_path.py``.
"""

from __future__ import annotations

from rooted_csf import Graph, RootedGraph, brute_force, rooted_X
from rooted_csf.chromatic import pointing_sum, x0_deletion_contraction, x0_tree_recursion

# %% colorings with three colors
p3 = Graph.path(3)
print("X(P3) in x0, x1, x2:")
print("  ", brute_force(p3, 2))

# %% rooting at an endpoint versus the middle vertex
for root in (0, 1):
    rg = RootedGraph(p3, root)
    print(f"\nroot {root}")
    print("  X_0    =", brute_force(rg, 2, "eq", 0))
    print("  X_!=0  =", brute_force(rg, 2, "ne", 0))
    print("  in Lambda[z]:", rooted_X(rg, "0"))

# %% three independent routes to X_0 agree
end = RootedGraph(p3, 0)
routes = {
    "brute force": brute_force(end, 3, "eq", 0),
    "deletion-contraction": x0_deletion_contraction(end, 3),
    "tree recursion": x0_tree_recursion(end, 3),
}
print("\nall routes agree:", len({str(v) for v in routes.values()}) == 1)

# %% summing X_0 over every root recovers x0 d/dx0 X
print("pointing identity:", pointing_sum(p3, 3) == brute_force(p3, 3).euler(0))
