"""Single-graph computations behind the ``compute`` and ``certify`` verbs."""

from __future__ import annotations

from typing import Optional

from ..chromatic import brute_force, chromatic_m, rooted_X, tree_chromatic_dp
from ..graphs import Graph, RootedGraph, chromatic_polynomial, one_line, parse_graph_text
from ..irreducibility import eisenstein, f_specialize, irreducibility_certificate, spec_kp, x_2p
from ..pointed import pointed_P, rooted_u, u_poly, w_poly
from ..polynomial import UniPoly, specialize
from ..symmetric import ZPoly

INVARIANTS = ("X", "X0", "Xne0", "Xi", "f0", "fne0", "fG", "chi", "principal",
              "P", "U", "Ur", "W", "spec-kp", "x-2p")

Q = UniPoly([0, 1])


class UsageError(ValueError):
    """Bad combination of options for an invariant."""


def _need_root(g) -> RootedGraph:
    if not isinstance(g, RootedGraph):
        raise UsageError("this invariant needs a rooted graph (add a 'root r' line)")
    return g


def _plain(g) -> Graph:
    return g.graph if isinstance(g, RootedGraph) else g


class Tagged(dict):
    """Result with a few named fields, printed as ``key=value`` pairs."""

    def to_json(self) -> dict:
        return {k: (v.to_json() if hasattr(v, "to_json") else v) for k, v in self.items()}

    def __str__(self):
        return "  ".join(f"{k}={v}" for k, v in self.items())


def evaluate(text: str, invariant: str, N: Optional[int] = None, i: Optional[int] = None,
             k: Optional[int] = None, p: Optional[int] = None, basis: Optional[str] = None,
             mode: str = "ne"):
    """Evaluate one invariant of the graph described by ``text``.

    Returns ``(graph, value)``.  Symmetric results are ``ZPoly`` in ``basis``
    (monomial by default, power sums for ``P``); with ``N`` the coloring sums
    are expanded into ``x_0..x_N`` instead.
    """
    if invariant not in INVARIANTS:
        raise UsageError(f"unknown invariant {invariant!r}; choose from {', '.join(INVARIANTS)}")
    if invariant == "W":
        g = parse_graph_text(text, multigraph=True)
        return g, w_poly(g)
    g = parse_graph_text(text)
    sym = basis or "m"
    if invariant == "X":
        if N is not None:
            result = brute_force(_plain(g), N)
        else:
            result = ZPoly.constant(chromatic_m(_plain(g))).to_basis(sym)
    elif invariant in ("X0", "Xne0"):
        rg = _need_root(g)
        if N is not None:
            result = brute_force(rg, N, "eq" if invariant == "X0" else "ne", 0)
        else:
            result = rooted_X(rg, "0" if invariant == "X0" else "ne0").to_basis(sym)
    elif invariant == "Xi":
        rg = _need_root(g)
        if N is None or i is None:
            raise UsageError("Xi needs --N and --i")
        result = brute_force(rg, N, "eq", i)
    elif invariant in ("f0", "fne0", "fG"):
        result = f_specialize(_need_root(g), invariant)
    elif invariant == "chi":
        result = chromatic_polynomial(_plain(g))
    elif invariant == "principal":
        plain = _plain(g)
        NN = N if N is not None else max(plain.n - 1, 1)
        vals = [Q ** j for j in range(NN + 1)]
        result = tree_chromatic_dp(plain, vals) if plain.is_tree() else specialize(brute_force(plain, NN), vals)
    elif invariant == "P":
        result = pointed_P(_need_root(g)).to_basis(basis or "p")
    elif invariant == "U":
        result = u_poly(_plain(g))
    elif invariant == "Ur":
        result = rooted_u(_need_root(g))
    elif invariant == "spec-kp":
        plain = _plain(g)
        if k is None or p is None:
            cert = irreducibility_certificate(plain)
            k = cert.k if k is None else k
            p = cert.p if p is None else p
        result = Tagged(k=k, p=p, polynomial=spec_kp(plain, k, p))
    else:  # x-2p
        pp = 2 if p is None else p
        result = Tagged(p=pp, mode=mode, polynomial=x_2p(_need_root(g), pp, mode))
    return g, result


def compute(text: str, invariant: str, **options) -> dict:
    """JSON form of ``evaluate``; identical input gives identical output."""
    g, value = evaluate(text, invariant, **options)
    return {"invariant": invariant, "input": one_line(g.to_text()), "result": value.to_json()}


def certify(text: str, p: Optional[int] = None) -> dict:
    """Irreducibility certificate for a connected graph, or for ``X^{2,p}`` of a rooted one."""
    g = parse_graph_text(text)
    if isinstance(g, RootedGraph):
        pp = 2 if p is None else p
        f = x_2p(g, pp, "ne")
        report = eisenstein(f, pp)
        return {
            "input": one_line(g.to_text()),
            "kind": "x-2p",
            "p": pp,
            "polynomial": f.to_json(),
            "monic_degree_n": f.degree == g.n and f.leading_coefficient() == 1,
            "report": report.to_json(),
        }
    cert = irreducibility_certificate(g)
    out = {"input": one_line(g.to_text()), "kind": "spec-kp"}
    out.update(cert.to_json())
    return out
