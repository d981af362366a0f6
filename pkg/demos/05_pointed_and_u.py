"""Pointed chromatic functions, internal spanning trees and U-polynomials."""

from __future__ import annotations

from rooted_csf import Graph, RootedGraph, pointed_P, rooted_X, rooted_u, u_poly
from rooted_csf.pointed import P_from_rootedU, X_from_U, internal_spanning_trees, phi_transform
from rooted_csf.chromatic import powersum_X

# %% pointed function and the substitution p_k -> p_k + z^k
paw = RootedGraph(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), 3)
P = pointed_P(paw)
print("P =", P)
print("phi(z P) == X_0:", phi_transform(P.times_z(1)) == rooted_X(paw, "0"))

# %% internal spanning trees: fixed points of the sign-reversing involution
counts = internal_spanning_trees(Graph.complete(4))
print("\nK4 internal spanning trees:", counts.involution, "signed sum:", counts.signed_sum)

# %% U-polynomials recover X and P
p3 = Graph.path(3)
print("\nU(P3) =", u_poly(p3))
print("U^r(P3, middle) =", rooted_u(RootedGraph(p3, 1)))
print("X from U matches:", X_from_U(u_poly(paw.graph), 4) == powersum_X(paw.graph))
print("P from U^r matches:", P_from_rootedU(rooted_u(paw), 4) == P)
