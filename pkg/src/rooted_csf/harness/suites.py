"""Verification suites.

A suite lists instances (one-line text serializations), checks each
instance independently, and optionally runs a final aggregation step over
the per-instance values (used for pairwise-distinctness sweeps).  Instances
can be checked in worker processes; results are merged by instance index,
so a sharded run produces the same report as a serial one.
"""

from __future__ import annotations

import hashlib
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..chromatic import (
    GuardError,
    brute_force,
    chromatic_m,
    coeff_zk,
    pointing_check,
    pointing_sum,
    powersum_X,
    powersum_X0,
    rooted_X,
    tree_chromatic_dp,
    x0_deletion_contraction_sym,
    x0_from_xne0,
    x0_tree_recursion_sym,
)
from ..enumeration import (
    free_trees,
    incomparability_graph,
    is_31_free,
    parse_poset_text,
    posets,
    rooted_graphs,
    rooted_shape,
    rooted_trees,
    small_graphs,
)
from ..graphs import Graph, RootedGraph, WeightedGraph, one_line, parse_graph_text
from ..irreducibility import (
    aj_formula,
    eisenstein,
    f0_tree,
    f_specialize,
    irreducibility_certificate,
    linear_coeff_parity,
    x0det2_relations,
    x_2p,
)
from ..pointed import (
    P_from_rootedU,
    X_from_U,
    ans_paw_check,
    f_H,
    internal_spanning_trees,
    internal_trees_by_activity,
    phi_transform,
    pointed_P,
    pointed_positive,
    psi_transform,
    random_edge_orders,
    rooted_u,
    u_poly,
    w_poly,
)
from ..polynomial import UniPoly
from ..symmetric import collect_symmetric, is_e_positive
from .report import Failure, Report

Q = UniPoly([0, 1])
PROG = "rooted-csf"


@dataclass(frozen=True)
class Instance:
    text: str
    tag: str = ""


CheckResult = Tuple[int, List[str], Any]


@dataclass(frozen=True)
class Suite:
    name: str
    default_max_n: int
    description: str
    instances: Callable[[int, int], List[Instance]]
    check: Callable[[Instance, int, int], CheckResult]
    finalize: Optional[Callable[[List[Tuple[int, Instance, Any]], int], Tuple[int, List[Tuple[int, str]]]]] = None


class Checker:
    """Collects named boolean checks for one instance."""

    def __init__(self):
        self.count = 0
        self.failed: List[str] = []

    def __call__(self, name: str, ok: bool):
        self.count += 1
        if not ok:
            self.failed.append(name)

    def result(self, value: Any = None) -> CheckResult:
        return self.count, self.failed, value


def _text(obj) -> str:
    return one_line(obj.to_text())


def _rooted(inst: Instance) -> RootedGraph:
    g = parse_graph_text(inst.text)
    if not isinstance(g, RootedGraph):
        raise ValueError("instance needs a root line")
    return g


def _graph(inst: Instance) -> Graph:
    g = parse_graph_text(inst.text)
    return g.graph if isinstance(g, RootedGraph) else g


def _instance_rng(inst: Instance, seed: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}|{inst.text}".encode()).hexdigest()
    return random.Random(int(digest[:16], 16))


def _rooted_graph_instances(max_n: int, connected: bool, lo: int = 1) -> List[Instance]:
    out = []
    for n in range(lo, max_n + 1):
        last = None
        for rg in rooted_graphs(n, connected):
            tag = "first-root" if rg.graph is not last else ""
            last = rg.graph
            out.append(Instance(_text(rg), tag))
    return out


def _rooted_tree_instances(max_n: int, lo: int = 1) -> List[Instance]:
    return [Instance(_text(t.to_rooted_graph())) for n in range(lo, max_n + 1) for t in rooted_trees(n)]


# ---------------------------------------------------------------------------
# identities

def _check_identities(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    g, n = rg.graph, rg.n
    N = max(n, 1)
    c = Checker()
    X = brute_force(g, N)
    eq = [brute_force(rg, N, "eq", k) for k in range(N + 1)]
    ne = [brute_force(rg, N, "ne", k) for k in range(N + 1)]
    X0, Xne0 = eq[0], ne[0]
    c("X = X_k + X_{!=k} for every color k", all(X == eq[k] + ne[k] for k in range(N + 1)))
    c("X_k = (0,k) . X_0", all(eq[k] == X0.swap(0, k) for k in range(N + 1)))
    c("X_{!=k} = (0,k) . X_{!=0}", all(ne[k] == Xne0.swap(0, k) for k in range(N + 1)))
    c("X_0 recovered from X_{!=0}", x0_from_xne0(Xne0, N) == X0)
    for name, ok in x0det2_relations(rg).items():
        c(f"(q,q,1,1) relation ({name})", ok)
    Z0 = collect_symmetric(X0, distinguished_x0=True)
    Zne = collect_symmetric(Xne0, distinguished_x0=True)
    c("x_0^k coefficient of X_0 (independent sets with root)",
      all(Z0.coefficient(k) == coeff_zk(rg, k, "root-in") for k in range(1, n + 1)) and Z0.coefficient(0).is_zero())
    c("x_0^k coefficient of X_{!=0} (independent sets without root)",
      all(Zne.coefficient(k) == coeff_zk(rg, k, "root-out") for k in range(0, n + 1)))
    c("power-sum expansion of X", collect_symmetric(X) == powersum_X(g))
    c("power-sum expansion of X_0", Z0 == powersum_X0(rg, include_x0=False))
    c("X_{!=0} at x_0 = 0 is X_G", Zne.coefficient(0) == chromatic_m(g))
    c("homogeneous of degree n", all(p.is_homogeneous(n) for p in (X, X0, Xne0)))
    if inst.tag == "first-root":
        c("pointing: x_0 d/dx_0 X = sum_r X_0", pointing_check(g, N))
    return c.result()


# ---------------------------------------------------------------------------
# power sums

def _power_sum_instances(max_n: int, seed: int) -> List[Instance]:
    out = []
    for n in range(1, max_n + 1):
        last = None
        for rg in rooted_graphs(n, connected_only=False):
            if rg.graph.m > 8:
                continue
            tag = "first-root" if rg.graph is not last else ""
            last = rg.graph
            out.append(Instance(_text(rg), tag))
    return out


def _check_power_sum(inst: Instance, max_n: int, seed: int) -> CheckResult:
    from ..symmetric import expand_vars

    rg = _rooted(inst)
    g, n = rg.graph, rg.n
    c = Checker()
    if inst.tag == "first-root":
        c("X = sum_S (-1)^|S| p_lambda(S), expanded", expand_vars(powersum_X(g), n) == brute_force(g, n - 1))
    lit = powersum_X0(rg)
    c("X_0 power-sum sum with p_k over x_0..x_N",
      expand_vars(lit, n, z_is_x0=True, powersums_include_x0=True) == brute_force(rg, n, "eq", 0))
    return c.result()


# ---------------------------------------------------------------------------
# deletion-contraction

def _dc_instances(max_n: int, seed: int) -> List[Instance]:
    trees = [Instance(i.text, "tree") for i in _rooted_tree_instances(max_n)]
    graphs = [Instance(i.text, "graph") for i in _rooted_graph_instances(min(max_n, 6), True)]
    return trees + graphs


def _check_dc(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    brute = collect_symmetric(brute_force(rg, rg.n, "eq", 0), distinguished_x0=True)
    dc = x0_deletion_contraction_sym(rg)
    c("brute force = deletion-contraction", brute == dc)
    if inst.tag == "tree":
        c("brute force = tree recursion", brute == x0_tree_recursion_sym(rg))
    return c.result()


# ---------------------------------------------------------------------------
# rooted trees are distinguished by f_0

def _key(f: UniPoly) -> Tuple[str, ...]:
    return tuple(str(c) for c in f.coeffs)


def _check_distinguish(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    f0 = f0_tree(rg)
    rng = _instance_rng(inst, seed)
    perm = list(range(rg.n))
    rng.shuffle(perm)
    c("f_0 invariant under relabeling", f0_tree(rg.relabel(perm)) == f0)
    c("fast path agrees with coloring DP", f0 == f_specialize(rg, "f0", "dp"))
    c("degree n", f0.degree == rg.n)
    return c.result(_key(f0))


def _finalize_distinct(rows: List[Tuple[int, Instance, Any]], max_n: int) -> Tuple[int, List[Tuple[int, str]]]:
    groups: Dict[Any, List[Tuple[int, Instance]]] = {}
    for idx, inst, key in rows:
        groups.setdefault(key, []).append((idx, inst))
    failures = []
    for key, members in groups.items():
        if len(members) > 1:
            shapes = {rooted_shape(_rooted(i)) for _, i in members}
            if len(shapes) > 1:
                texts = " | ".join(i.text for _, i in members)
                failures.append((members[0][0], f"non-isomorphic rooted trees share f_0: {texts}"))
    return len(groups), failures


# ---------------------------------------------------------------------------
# principal specialization on free trees

def principal(g: Graph, N: int) -> UniPoly:
    """``X_T(1, q, ..., q^N)``."""
    return tree_chromatic_dp(g, [Q ** i for i in range(N + 1)])


def _principal_instances(max_n: int, seed: int) -> List[Instance]:
    return [Instance(_text(t)) for n in range(1, max_n + 1) for t in free_trees(n)]


def _check_principal(inst: Instance, max_n: int, seed: int) -> CheckResult:
    g = _graph(inst)
    c = Checker()
    values = {N: _key(principal(g, N)) for N in range(max(g.n - 1, 1), max(max_n, 2))}
    if g.n <= 5:
        from ..polynomial import specialize

        N = max(g.n - 1, 1)
        bf = specialize(brute_force(g, N), [Q ** i for i in range(N + 1)])
        c("tree DP agrees with brute force", _key(bf) == values[N])
    return c.result(values)


def _finalize_principal(rows, max_n):
    failures = []
    checks = 0
    for N in range(1, max(max_n, 2)):
        groups: Dict[Any, List[Tuple[int, Instance]]] = {}
        for idx, inst, values in rows:
            if N in values:
                groups.setdefault(values[N], []).append((idx, inst))
                checks += 1
        for members in groups.values():
            if len(members) > 1:
                texts = " | ".join(i.text for _, i in members)
                failures.append((members[0][0], f"N={N}: non-isomorphic trees share X_T(1,q,...,q^N): {texts}"))
    return checks, failures


# ---------------------------------------------------------------------------
# Eisenstein sweeps

TREE_PRIMES = (2, 3, 5, 7)


def _check_eis_trees(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    for p in TREE_PRIMES:
        f = x_2p(rg, p, "ne", method="dp")
        c(f"p={p}: monic of degree n", f.degree == rg.n and f.leading_coefficient() == 1)
        c(f"p={p}: Eisenstein at p", eisenstein(f, p).satisfied)
    return c.result()


def _bipartite_instances(max_n: int, seed: int) -> List[Instance]:
    out = []
    for n in range(1, max_n + 1):
        for rg in rooted_graphs(n, True):
            if rg.graph.is_bipartite():
                out.append(Instance(_text(rg)))
    return out


def _check_eis_bipartite(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    f = x_2p(rg, 2, "ne", method="brute")
    c("monic of degree n", f.degree == rg.n and f.leading_coefficient() == 1)
    c("Eisenstein at 2", eisenstein(f, 2).satisfied)
    return c.result()


def _connected_instances(max_n: int, seed: int) -> List[Instance]:
    return [Instance(_text(g)) for n in range(1, max_n + 1) for g in small_graphs(n, True)]


def _check_certificate(inst: Instance, max_n: int, seed: int) -> CheckResult:
    g = _graph(inst)
    c = Checker()
    cert = irreducibility_certificate(g)
    c("Eisenstein certificate satisfied", cert.report.satisfied)
    c("coefficients match the subset-sum formula",
      [int(a) for a in cert.polynomial.coeffs] == [aj_formula(g, cert.k, cert.p, j) for j in range(g.n + 1)])
    if g.is_tree() and g.n > 1:
        c("trees use k=2, p=3", (cert.k, cert.p) == (2, 3))
    return c.result()


def _all_graph_instances(max_n: int, seed: int) -> List[Instance]:
    return [Instance(_text(g)) for n in range(1, max_n + 1) for g in small_graphs(n)]


def _check_parity(inst: Instance, max_n: int, seed: int) -> CheckResult:
    c = Checker()
    c("linear coefficient odd iff connected bipartite", linear_coeff_parity(_graph(inst)))
    return c.result()


# ---------------------------------------------------------------------------
# pointed / U

def _pointed_instances(max_n: int, seed: int) -> List[Instance]:
    return _rooted_graph_instances(max_n, True)


def _check_pointed(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    P = pointed_P(rg)
    zP = P.times_z(1)
    X0 = rooted_X(rg, "0")
    c("X_0 = phi(z P)", phi_transform(zP) == X0)
    c("z P = psi(X_0)", psi_transform(X0) == zP)
    c("P(-z) monomial-positive", pointed_positive(rg))
    c("P recovered from rooted U", P_from_rootedU(rooted_u(rg), rg.n) == P)
    if inst.tag == "first-root":
        g = rg.graph
        base = internal_spanning_trees(g)
        c("involution fixed points = signed sum", base.involution == base.signed_sum >= 1)
        for order in random_edge_orders(g.m, 5, seed):
            counts = internal_spanning_trees(g, order)
            c("edge order does not change the count",
              counts.involution == counts.signed_sum == base.signed_sum
              and internal_trees_by_activity(g, order) == base.signed_sum)
    return c.result()


def _check_ans_paw(inst: Instance, max_n: int, seed: int) -> CheckResult:
    rg = _rooted(inst)
    c = Checker()
    for k in range(rg.n):
        c(f"(-z)^{k} coefficient of P", ans_paw_check(rg, k))
    if rg.graph.is_tree():
        import itertools

        ok = True
        others = [v for v in range(rg.n) if v != rg.root]
        for k in range(rg.n):
            for combo in itertools.combinations(others, k):
                h = rg.graph.induced(sorted((rg.root,) + combo))
                if h.is_connected() and f_H(h) != 1:
                    ok = False
        c("trees: every multiplier f(H) is 1", ok)
    return c.result()


def _u_instances(max_n: int, seed: int) -> List[Instance]:
    seen = set()
    out = []
    for n in range(1, max_n + 1):
        for g in small_graphs(n):
            if g.is_connected() or (n <= 5 and g.m <= 8):
                t = _text(g)
                if t not in seen:
                    seen.add(t)
                    out.append(Instance(t))
    return out


def _check_u(inst: Instance, max_n: int, seed: int) -> CheckResult:
    from ..enumeration import canonical_rooted_graph

    g = _graph(inst)
    c = Checker()
    U = u_poly(g)
    c("U = W at unit weights", U == w_poly(WeightedGraph.unit(g)))
    c("X recovered from U", X_from_U(U, g.n) == powersum_X(g))
    if g.m == g.n - len(g.component_masks()):
        c("forest: y does not appear", U.y_free())
    seen = set()
    for r in range(g.n):
        rg = RootedGraph(g, r)
        key = canonical_rooted_graph(rg)
        if key in seen:
            continue
        seen.add(key)
        c("P recovered from rooted U", P_from_rootedU(rooted_u(rg), g.n) == pointed_P(rg))
    return c.result()


# ---------------------------------------------------------------------------
# e-positivity over posets

def _poset_instances(max_n: int, seed: int) -> List[Instance]:
    return [Instance(one_line(p.to_text())) for n in range(1, max_n + 1) for p in posets(n)]


def _check_epositivity(inst: Instance, max_n: int, seed: int) -> CheckResult:
    p = parse_poset_text(inst.text)
    g = incomparability_graph(p)
    c = Checker()
    for r in range(p.n):
        if is_31_free(p.remove(r)):
            c(f"root {r}: X_0 of the incomparability graph is e-positive",
              is_e_positive(rooted_X(RootedGraph(g, r), "0")))
    return c.result()


# ---------------------------------------------------------------------------
# paper examples

def _paper_example_instances(max_n: int, seed: int) -> List[Instance]:
    from . import examples

    return [Instance(name) for name in examples.EXAMPLES]


def _check_paper_example(inst: Instance, max_n: int, seed: int) -> CheckResult:
    from . import examples

    c = Checker()
    for label, ok in examples.EXAMPLES[inst.text]():
        c(label, ok)
    return c.result()


# ---------------------------------------------------------------------------
# registry

SUITES: Dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("identities", 6, "relations among X, X_i, X_{!=i}; coefficient and power-sum formulas; pointing",
              lambda n, s: _rooted_graph_instances(n, False), _check_identities),
        Suite("power-sum", 5, "power-sum sums expanded into variables and compared with brute force",
              _power_sum_instances, _check_power_sum),
        Suite("deletion-contraction", 8, "brute force, tree recursion and deletion-contraction agree on X_0",
              _dc_instances, _check_dc),
        Suite("distinguish-rooted", 12, "f_0 = X_0(q,q,1,1) separates rooted trees",
              lambda n, s: _rooted_tree_instances(n), _check_distinguish, _finalize_distinct),
        Suite("principal-conjecture", 13, "X_T(1,q,...,q^N) separates trees with at most N+1 vertices",
              _principal_instances, _check_principal, _finalize_principal),
        Suite("eisenstein-trees", 10, "X_{!=0} at (q,q,1^p) is monic and Eisenstein at p for rooted trees",
              lambda n, s: _rooted_tree_instances(n), _check_eis_trees),
        Suite("eisenstein-bipartite", 7, "X_{!=0} at (q,q,1,1) is monic and Eisenstein at 2 for bipartite graphs",
              _bipartite_instances, _check_eis_bipartite),
        Suite("certificates", 6, "(k,p) specialization certificate for connected graphs",
              _connected_instances, _check_certificate),
        Suite("parity", 7, "parity of the linear coefficient of the chromatic polynomial",
              _all_graph_instances, _check_parity),
        Suite("pointed", 6, "pointed function vs X_0, positivity, rooted U recovery, internal spanning trees",
              _pointed_instances, _check_pointed),
        Suite("ans-paw", 6, "(-z)^k coefficients of the pointed function via connected induced subgraphs",
              _pointed_instances, _check_ans_paw),
        Suite("u-polynomials", 6, "U = W at unit weights; X and P recovered from U and rooted U",
              _u_instances, _check_u),
        Suite("epositivity", 6, "rooted incomparability graphs with (3+1)-free P - r are e-positive",
              _poset_instances, _check_epositivity),
        Suite("paper-examples", 0, "worked examples reproduced exactly",
              _paper_example_instances, _check_paper_example),
    ]
}


# ---------------------------------------------------------------------------
# runner

def _run_chunk(name: str, max_n: int, seed: int, items: Sequence[Tuple[int, Instance]]):
    suite = SUITES[name]
    out = []
    for idx, inst in items:
        try:
            checks, failed, value = suite.check(inst, max_n, seed)
            out.append((idx, checks, failed, value, None))
        except GuardError as exc:
            out.append((idx, 0, [], None, str(exc)))
    return out


def reproduce_command(name: str, max_n: int, seed: int, text: str) -> str:
    return f"{PROG} verify {name} --max-n {max_n} --seed {seed} --instance '{text}'"


def verify_suite(name: str, max_n: Optional[int] = None, seed: int = 0, jobs: int = 1,
                 instance: Optional[str] = None, tag: str = "first-root") -> Report:
    """Run a registered suite and return its report."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    if max_n is None:
        max_n = suite.default_max_n
    start = time.perf_counter()
    if instance is not None:
        items = [Instance(instance, tag)]
    else:
        items = suite.instances(max_n, seed)
    indexed = list(enumerate(items))
    if jobs > 1 and len(indexed) > 1:
        size = max(1, len(indexed) // (jobs * 8))
        chunks = [indexed[i:i + size] for i in range(0, len(indexed), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, [name] * len(chunks), [max_n] * len(chunks),
                             [seed] * len(chunks), chunks)
            results = [r for part in parts for r in part]
    else:
        results = _run_chunk(name, max_n, seed, indexed)
    results.sort(key=lambda r: r[0])

    report = Report(name, max_n, seed, instances=len(items))
    rows = []
    for idx, checks, failed, value, guard in results:
        inst = items[idx]
        report.checks += checks
        for msg in failed:
            report.failures.append(Failure(idx, inst.text, msg, reproduce_command(name, max_n, seed, inst.text)))
        if guard is not None:
            report.guard_breaches.append(Failure(idx, inst.text, guard, reproduce_command(name, max_n, seed, inst.text)))
        else:
            rows.append((idx, inst, value))
    if suite.finalize is not None:
        checks, failed = suite.finalize(rows, max_n)
        report.checks += checks
        for idx, msg in failed:
            report.failures.append(Failure(idx, items[idx].text, msg,
                                           f"{PROG} verify {name} --max-n {max_n} --seed {seed}"))
    report.wall_time_s = round(time.perf_counter() - start, 3)
    return report
