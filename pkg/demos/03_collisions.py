"""Non-isomorphic objects that share an invariant, found by exhaustive search."""

from __future__ import annotations

from rooted_csf.harness.search import search_collision
from rooted_csf.graphs import one_line
from rooted_csf.symmetric import convert

# %% two 5-vertex graphs with the same X_G
for c in search_collision("X-unrooted", 5):
    print("X_G =", convert(c.value, "mt"))
    for g in c.members:
        print("   ", one_line(g.to_text()))

# %% ... and rooted graphs with the same X_0
for c in search_collision("X0-rooted", 5):
    print("\nX_0 =", c.value.to_basis("mt"))
    for g in c.members:
        print("   ", one_line(g.to_text()))

# %% unrooted trees are not separated by (q, q, 1, 1); the first clash has 11 vertices
for n in range(1, 12):
    found = search_collision("f-unrooted", n)
    if found:
        print(f"\nfirst f-collision at n={n}: f = {found[0].value}")
        for t in found[0].members:
            print("   ", one_line(t.to_text()))
        break
