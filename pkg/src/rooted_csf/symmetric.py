"""Partitions, symmetric-function expansions and the graded ring Lambda[z].

A ``SymExpansion`` is a finite linear combination of basis elements indexed
by partitions, in one of four bases:

=======  =========================================
``m``    monomial
``mt``   augmented monomial, ``mt_la = (prod r_i!) m_la``
``p``    power sum
``e``    elementary
=======  =========================================

A ``ZPoly`` is a polynomial in ``z`` whose coefficients are expansions in a
common basis.  Rooted invariants are ``ZPoly`` values: ``z`` plays the role
of ``x_0`` and the symmetric coefficients live in ``x_1, x_2, ...``.

Conversion to and from ``m`` goes through exact transition matrices that are
built once per degree.  ``p -> m`` and ``e -> m`` count assignments directly;
the reverse directions are exact linear solves.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .polynomial import MultiPoly, UniPoly, frac_str

Partition = Tuple[int, ...]

BASES = ("m", "mt", "p", "e")

#: Largest homogeneous degree the transition tables will be built for.
MAX_DEGREE = 12


class DegreeBoundError(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions

def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def as_partition(parts: Iterable[int]) -> Partition:
    out = tuple(sorted(parts, reverse=True))
    if out and out[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def multiplicity_factor(la: Partition) -> int:
    """``r_1! r_2! ...`` where ``r_i`` counts parts equal to ``i``."""
    return math.prod(math.factorial(r) for r in Counter(la).values())


def remove_part(la: Partition, a: int) -> Partition:
    i = la.index(a)
    return la[:i] + la[i + 1:]


# ---------------------------------------------------------------------------
# transition matrices

def _p_in_m(la: Partition, mu: Partition) -> int:
    """Coefficient of ``x^mu`` in ``p_la``: assignments of parts to variables."""

    @lru_cache(maxsize=None)
    def count(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(la):
            return 1 if not any(remaining) else 0
        part = la[i]
        total = 0
        seen = set()
        for j, r in enumerate(remaining):
            if r >= part:
                nxt = list(remaining)
                nxt[j] -= part
                total += count(i + 1, tuple(sorted(nxt, reverse=True)))
                seen.add(j)
        return total

    return count(0, mu)


def _e_in_m(la: Partition, mu: Partition) -> int:
    """Coefficient of ``x^mu`` in ``e_la``: 0/1 matrices with margins la, mu."""
    from itertools import combinations

    @lru_cache(maxsize=None)
    def count(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(la):
            return 1 if not any(remaining) else 0
        total = 0
        open_cols = [j for j, r in enumerate(remaining) if r > 0]
        for cols in combinations(open_cols, la[i]):
            nxt = list(remaining)
            for j in cols:
                nxt[j] -= 1
            total += count(i + 1, tuple(sorted(nxt, reverse=True)))
        return total

    return count(0, mu)


def _solve_inverse(mat: List[List[Fraction]]) -> List[List[Fraction]]:
    """Exact Gauss-Jordan inverse of a square rational matrix."""
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("transition matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        if pv != 1:
            aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                row_c = aug[col]
                aug[r] = [a - f * b for a, b in zip(aug[r], row_c)]
    return [row[n:] for row in aug]


class _Tables:
    """Per-degree transition data, computed lazily and then read-only."""

    def __init__(self):
        self._to_m: Dict[Tuple[str, int], Dict[Partition, Dict[Partition, Fraction]]] = {}
        self._from_m: Dict[Tuple[str, int], Dict[Partition, Dict[Partition, Fraction]]] = {}

    def to_m(self, basis: str, d: int) -> Dict[Partition, Dict[Partition, Fraction]]:
        key = (basis, d)
        if key not in self._to_m:
            parts = list(partitions(d))
            fn = _p_in_m if basis == "p" else _e_in_m
            table = {}
            for la in parts:
                row = {}
                for mu in parts:
                    c = fn(la, mu)
                    if c:
                        row[mu] = Fraction(c)
                table[la] = row
            self._to_m[key] = table
        return self._to_m[key]

    def from_m(self, basis: str, d: int) -> Dict[Partition, Dict[Partition, Fraction]]:
        key = (basis, d)
        if key not in self._from_m:
            parts = list(partitions(d))
            fwd = self.to_m(basis, d)
            mat = [[fwd[la].get(mu, Fraction(0)) for mu in parts] for la in parts]
            inv = _solve_inverse(mat)
            # rows of fwd: basis_la = sum_mu A[la][mu] m_mu, so m_mu = sum_la inv[mu][la] basis_la
            table = {}
            for i, mu in enumerate(parts):
                table[mu] = {la: inv[i][j] for j, la in enumerate(parts) if inv[i][j] != 0}
            self._from_m[key] = table
        return self._from_m[key]


_TABLES = _Tables()


# ---------------------------------------------------------------------------
# expansions

def _clean(coeffs: Mapping[Partition, object]) -> Dict[Partition, Fraction]:
    out = {}
    for la, c in coeffs.items():
        c = Fraction(c)
        if c != 0:
            out[as_partition(la)] = out.get(as_partition(la), 0) + c
    return {la: c for la, c in out.items() if c != 0}


class SymExpansion:
    """Linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Partition, object] = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        self.coeffs: Dict[Partition, Fraction] = _clean(coeffs or {})

    @classmethod
    def _raw(cls, basis: str, coeffs: Dict[Partition, Fraction]) -> "SymExpansion":
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.coeffs = {k: v for k, v in coeffs.items() if v != 0}
        return obj

    @classmethod
    def single(cls, basis: str, la: Iterable[int], c=1) -> "SymExpansion":
        return cls(basis, {as_partition(la): c})

    @classmethod
    def one(cls, basis: str = "m") -> "SymExpansion":
        return cls._raw(basis, {(): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        return {sum(la) for la in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __getitem__(self, la) -> Fraction:
        return self.coeffs.get(as_partition(la), Fraction(0))

    def _same(self, other: "SymExpansion") -> "SymExpansion":
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        o = self._same(other)
        out = dict(self.coeffs)
        for la, c in o.coeffs.items():
            out[la] = out.get(la, 0) + c
        return SymExpansion._raw(self.basis, out)

    def __neg__(self):
        return SymExpansion._raw(self.basis, {la: -c for la, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SymExpansion":
        c = Fraction(c)
        return SymExpansion._raw(self.basis, {la: c * v for la, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymExpansion):
            return NotImplemented
        # products of p_la and of e_la are concatenations of partitions
        mult_basis = self.basis if self.basis in ("p", "e") else "p"
        a = convert(self, mult_basis)
        b = convert(other, mult_basis)
        out: Dict[Partition, Fraction] = {}
        for la, c1 in a.coeffs.items():
            for mu, c2 in b.coeffs.items():
                nu = as_partition(la + mu)
                out[nu] = out.get(nu, 0) + c1 * c2
        return convert(SymExpansion._raw(mult_basis, out), self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        if other.basis == self.basis:
            return self.coeffs == other.coeffs
        return convert(self, "m").coeffs == convert(other, "m").coeffs

    def __hash__(self):
        return hash(frozenset(convert(self, "m").coeffs.items()))

    def __repr__(self):
        return f"SymExpansion({self.basis!r}, {{{', '.join(f'{la}: {frac_str(c)}' for la, c in self.sorted_items())}}})"

    def sorted_items(self) -> List[Tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), [-x for x in kv[0]]))

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for la, c in self.sorted_items():
            if not la:
                out.append(frac_str(c))
                continue
            sym = f"{self.basis}[{','.join(map(str, la))}]"
            out.append(sym if c == 1 else f"-{sym}" if c == -1 else f"{frac_str(c)}*{sym}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"partition": list(la), "coeff": frac_str(c)}
                      for la, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymExpansion":
        return cls(obj["basis"], {tuple(t["partition"]): Fraction(t["coeff"]) for t in obj["terms"]})


def _check_degree(x: SymExpansion, bound: int):
    for la in x.coeffs:
        if sum(la) > bound:
            raise DegreeBoundError(f"weight {sum(la)} exceeds the supported degree bound {bound}")


def convert(x: SymExpansion, target: str, max_degree: Optional[int] = None) -> SymExpansion:
    """Re-express ``x`` in the ``target`` basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if x.basis == target:
        return x
    bound = MAX_DEGREE if max_degree is None else max_degree
    # to monomial
    if x.basis == "m":
        in_m = x.coeffs
    elif x.basis == "mt":
        in_m = {la: c * multiplicity_factor(la) for la, c in x.coeffs.items()}
    else:
        _check_degree(x, bound)
        in_m = {}
        for la, c in x.coeffs.items():
            for mu, a in _TABLES.to_m(x.basis, sum(la))[la].items():
                in_m[mu] = in_m.get(mu, 0) + c * a
    # from monomial
    if target == "m":
        out = in_m
    elif target == "mt":
        out = {la: Fraction(c) / multiplicity_factor(la) for la, c in in_m.items()}
    else:
        _check_degree(SymExpansion._raw("m", dict(in_m)), bound)
        out = {}
        for mu, c in in_m.items():
            if c == 0:
                continue
            for la, a in _TABLES.from_m(target, sum(mu))[mu].items():
                out[la] = out.get(la, 0) + c * a
    return SymExpansion._raw(target, dict(out))


# ---------------------------------------------------------------------------
# Lambda[z]

class ZPoly:
    """Polynomial in ``z`` with symmetric-function coefficients in one basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, coeffs: Mapping[int, SymExpansion] = None, basis: str = "m"):
        self.basis = basis
        clean = {}
        for k, x in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative z-degree")
            x = convert(x, basis)
            if not x.is_zero():
                clean[k] = x
        self.coeffs: Dict[int, SymExpansion] = clean

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Iterable[int], object]], basis: str = "m") -> "ZPoly":
        """Build from ``(z_degree, partition, coefficient)`` triples."""
        acc: Dict[int, Dict[Partition, Fraction]] = {}
        for k, la, c in terms:
            row = acc.setdefault(k, {})
            la = as_partition(la)
            row[la] = row.get(la, 0) + Fraction(c)
        return cls({k: SymExpansion(basis, row) for k, row in acc.items()}, basis)

    @classmethod
    def constant(cls, x: SymExpansion) -> "ZPoly":
        return cls({0: x}, x.basis)

    def terms(self) -> Iterator[Tuple[int, Partition, Fraction]]:
        for k in sorted(self.coeffs):
            for la, c in sorted(self.coeffs[k].coeffs.items()):
                yield k, la, c

    def coefficient(self, k: int) -> SymExpansion:
        return self.coeffs.get(k, SymExpansion(self.basis))

    def is_zero(self) -> bool:
        return not self.coeffs

    def z_degree(self) -> int:
        return max(self.coeffs, default=-1)

    def to_basis(self, basis: str) -> "ZPoly":
        if basis == self.basis:
            return self
        return ZPoly({k: convert(x, basis) for k, x in self.coeffs.items()}, basis)

    def _coerce(self, other) -> Optional["ZPoly"]:
        if isinstance(other, ZPoly):
            return other.to_basis(self.basis)
        if isinstance(other, SymExpansion):
            return ZPoly.constant(convert(other, self.basis))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, x in o.coeffs.items():
            out[k] = out[k] + x if k in out else x
        return ZPoly(out, self.basis)

    def __neg__(self):
        return ZPoly({k: -x for k, x in self.coeffs.items()}, self.basis)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def scale(self, c) -> "ZPoly":
        return ZPoly({k: x.scale(c) for k, x in self.coeffs.items()}, self.basis)

    def times_z(self, j: int = 1) -> "ZPoly":
        return ZPoly({k + j: x for k, x in self.coeffs.items()}, self.basis)

    def divide_z(self, j: int = 1) -> "ZPoly":
        if any(k < j for k in self.coeffs):
            raise ValueError(f"not divisible by z^{j}")
        return ZPoly({k - j: x for k, x in self.coeffs.items()}, self.basis)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mb = self.basis if self.basis in ("p", "e") else "p"
        a, b = self.to_basis(mb), o.to_basis(mb)
        out: Dict[int, Dict[Partition, Fraction]] = {}
        for k1, x1 in a.coeffs.items():
            for k2, x2 in b.coeffs.items():
                row = out.setdefault(k1 + k2, {})
                for la, c1 in x1.coeffs.items():
                    for mu, c2 in x2.coeffs.items():
                        nu = as_partition(la + mu)
                        row[nu] = row.get(nu, 0) + c1 * c2
        return ZPoly({k: SymExpansion(mb, row) for k, row in out.items()}, mb).to_basis(self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self.to_basis("m"), other.to_basis("m")
        return {k: x.coeffs for k, x in a.coeffs.items()} == {k: x.coeffs for k, x in b.coeffs.items()}

    def __hash__(self):
        return hash(self.key())

    def key(self) -> str:
        """Canonical serialization (monomial basis) used as a hash key."""
        import json

        return json.dumps(self.to_basis("m").to_json(), sort_keys=True, separators=(",", ":"))

    def is_homogeneous_rooted(self, n: int) -> bool:
        """z^k coefficient homogeneous of degree ``n - k`` for every k."""
        return all(x.degrees() <= {n - k} for k, x in self.coeffs.items())

    def __repr__(self):
        return f"ZPoly(basis={self.basis!r}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({x})" + ("" if k == 0 else ("*z" if k == 1 else f"*z^{k}"))
            for k, x in sorted(self.coeffs.items())
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"z": k, "partition": list(la), "coeff": frac_str(c)} for k, la, c in self.terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "ZPoly":
        return cls.from_terms(((t["z"], t["partition"], t["coeff"]) for t in obj["terms"]), obj["basis"])


def split_first_variable(x: SymExpansion) -> ZPoly:
    """View ``f(x_0, x_1, ...)`` symmetric in all variables as an element of Lambda[z], z = x_0."""
    if x.basis == "m":
        out: Dict[int, Dict[Partition, Fraction]] = {}
        for la, c in x.coeffs.items():
            out.setdefault(0, {})
            out[0][la] = out[0].get(la, 0) + c
            for a in set(la):
                row = out.setdefault(a, {})
                rest = remove_part(la, a)
                row[rest] = row.get(rest, 0) + c
        return ZPoly({k: SymExpansion("m", r) for k, r in out.items()}, "m")
    if x.basis == "p":
        return plus_z_powers(ZPoly.constant(x), sign=1)
    return split_first_variable(convert(x, "m")).to_basis(x.basis)


def plus_z_powers(x: ZPoly, sign: int) -> ZPoly:
    """Ring map on Lambda[z] sending ``p_k`` to ``p_k + sign * z^k`` (z fixed)."""
    x = x.to_basis("p")
    out: Dict[int, Dict[Partition, Fraction]] = {}
    for k0, la, c in x.terms():
        # expand prod_i (p_{la_i} + sign z^{la_i}) over subsets of parts given to z
        counts = Counter(la)
        items = sorted(counts.items())
        for picks in product(*[range(r + 1) for _, r in items]):
            coeff = c
            zdeg = k0
            rest: List[int] = []
            for (part, r), t in zip(items, picks):
                coeff *= math.comb(r, t) * sign ** t
                zdeg += part * t
                rest.extend([part] * (r - t))
            row = out.setdefault(zdeg, {})
            key = as_partition(rest)
            row[key] = row.get(key, 0) + coeff
    return ZPoly({k: SymExpansion("p", r) for k, r in out.items()}, "p")


# ---------------------------------------------------------------------------
# concrete variables

def _distinct_perms(vec: List[int]) -> Iterator[Tuple[int, ...]]:
    counts = Counter(vec)
    keys = sorted(counts)
    n = len(vec)
    cur: List[int] = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


@lru_cache(maxsize=4096)
def _m_terms(la: Partition, nvars: int) -> Tuple[Tuple[int, ...], ...]:
    if len(la) > nvars:
        return ()
    return tuple(_distinct_perms(list(la) + [0] * (nvars - len(la))))


def _p_poly(k: int, nvars: int, offset: int, total: int) -> MultiPoly:
    terms = {}
    for i in range(offset, nvars):
        e = [0] * total
        e[i] = k
        terms[tuple(e)] = 1
    return MultiPoly(total, terms)


def expand_vars(x, N: int, z_is_x0: bool = False, powersums_include_x0: bool = False) -> MultiPoly:
    """Substitute concrete variables.

    A ``SymExpansion`` becomes a polynomial in ``N`` variables ``x_1..x_N``
    (stored at indices ``0..N-1``).  With ``z_is_x0`` a ``ZPoly`` (or an
    expansion regarded as its ``z^0`` part) becomes a polynomial in ``N + 1``
    variables with ``z`` at index 0.  ``powersums_include_x0`` makes each
    ``p_k`` of a p-basis input range over ``x_0..x_N`` instead of
    ``x_1..x_N``; this is the literal reading of the rooted power-sum sum.
    """
    if N < 1:
        raise ValueError("need at least one variable")
    if isinstance(x, SymExpansion):
        if not z_is_x0:
            return _expand_sym(x, N, 0, N)
        x = ZPoly.constant(x)
    if not isinstance(x, ZPoly):
        raise TypeError(f"cannot expand {type(x).__name__}")
    if not z_is_x0:
        if set(x.coeffs) - {0}:
            raise ValueError("ZPoly with positive z-degree needs z_is_x0=True")
        return _expand_sym(x.coefficient(0), N, 0, N)
    total = N + 1
    out = MultiPoly.zero(total)
    for k, sym in x.coeffs.items():
        if powersums_include_x0:
            if sym.basis != "p":
                raise ValueError("powersums_include_x0 applies to p-basis input")
            part = _expand_sym(sym, total, 0, total)
        else:
            part = _expand_sym(sym, total, 1, total)
        out = out + part.times_var(0, k)
    return out


def _expand_sym(x: SymExpansion, nvars: int, offset: int, total: int) -> MultiPoly:
    """Expand over variables ``offset..nvars-1`` of a ``total``-variable ring."""
    span = nvars - offset
    if x.basis == "p":
        out = MultiPoly.zero(total)
        cache: Dict[int, MultiPoly] = {}
        for la, c in x.coeffs.items():
            term = MultiPoly.constant(total, c)
            for part in la:
                if part not in cache:
                    cache[part] = _p_poly(part, nvars, offset, total)
                term = term * cache[part]
            out = out + term
        return out
    xm = convert(x, "m")
    terms: Dict[Tuple[int, ...], Fraction] = {}
    pad = (0,) * offset
    for la, c in xm.coeffs.items():
        for e in _m_terms(la, span):
            key = pad + e
            terms[key] = terms.get(key, 0) + c
    return MultiPoly(total, terms)


class SymmetryError(ValueError):
    pass


def collect_symmetric(poly: MultiPoly, distinguished_x0: bool = False, basis: str = "m"):
    """Inverse of ``expand_vars`` on its image.

    Without ``distinguished_x0`` every variable is symmetric and the result is
    a ``SymExpansion``.  With it, variable 0 is ``z`` and the result is a
    ``ZPoly``.  Symmetry is verified on adjacent transpositions, which
    generate the full symmetric group.
    """
    first = 1 if distinguished_x0 else 0
    for i in range(first, poly.nvars - 1):
        if poly.swap(i, i + 1) != poly:
            raise SymmetryError(f"polynomial is not symmetric under x{i} <-> x{i + 1}")
    rows: Dict[int, Dict[Partition, Fraction]] = {}
    for e, c in poly.terms.items():
        body = e[first:]
        if all(body[i] >= body[i + 1] for i in range(len(body) - 1)):
            k = e[0] if distinguished_x0 else 0
            la = tuple(v for v in body if v)
            rows.setdefault(k, {})[la] = c
    if distinguished_x0:
        return ZPoly({k: SymExpansion("m", r) for k, r in rows.items()}, "m").to_basis(basis)
    return convert(SymExpansion("m", rows.get(0, {})), basis)


def is_e_positive(x) -> bool:
    """Every e-coefficient of every z-coefficient is nonnegative."""
    if isinstance(x, SymExpansion):
        x = ZPoly.constant(x)
    return all(c >= 0 for _, _, c in x.to_basis("e").terms())


def is_monomial_positive(x) -> bool:
    if isinstance(x, SymExpansion):
        x = ZPoly.constant(x)
    return all(c >= 0 for _, _, c in x.to_basis("m").terms())


# ---------------------------------------------------------------------------
# specialization at grouped values

def _m_at_groups(la: Partition, groups: Sequence[Tuple[UniPoly, int]], var: str) -> UniPoly:
    """``m_la`` with ``groups[j][1]`` variables each set to ``groups[j][0]``."""
    counts = sorted(Counter(la).items())
    g = len(groups)

    def compositions(r: int, k: int) -> Iterator[Tuple[int, ...]]:
        if k == 1:
            yield (r,)
            return
        for first in range(r + 1):
            for rest in compositions(r - first, k - 1):
                yield (first,) + rest

    total = UniPoly([], var)
    per_part = [list(compositions(r, g)) for _, r in counts]
    for choice in product(*per_part):
        # choice[a][j]: how many copies of the a-th distinct part go to group j
        coeff = 1
        ok = True
        poly = UniPoly([1], var)
        for j, (value, mult) in enumerate(groups):
            used = sum(ch[j] for ch in choice)
            if used > mult:
                ok = False
                break
            # distinct placements of the chosen parts into `mult` slots
            coeff *= math.factorial(mult) // (
                math.factorial(mult - used) * math.prod(math.factorial(ch[j]) for ch in choice)
            )
            deg = sum(ch[j] * part for ch, (part, _) in zip(choice, counts))
            if deg:
                poly = poly * value ** deg
        if ok and coeff:
            total = total + poly.scale(coeff)
    return total


def specialize_sym(x, groups: Sequence[Tuple[object, int]], z_value=None, var: str = "q") -> UniPoly:
    """Evaluate at grouped variable values.

    ``groups`` lists ``(value, multiplicity)`` for ``x_1, x_2, ...`` in order;
    every other variable is 0.  Values may be numbers or ``UniPoly``.  For a
    ``ZPoly`` the image of ``z`` is ``z_value``.
    """
    groups = [(v if isinstance(v, UniPoly) else UniPoly([v], var), m) for v, m in groups]
    if isinstance(x, SymExpansion):
        x = ZPoly.constant(x)
    zv = None
    if z_value is not None:
        zv = z_value if isinstance(z_value, UniPoly) else UniPoly([z_value], var)
    elif set(x.coeffs) - {0}:
        raise ValueError("z_value required for positive z-degrees")
    total = UniPoly([], var)
    for k, sym in x.coeffs.items():
        if sym.basis == "p":
            part_val: Dict[int, UniPoly] = {}
            acc = UniPoly([], var)
            for la, c in sym.coeffs.items():
                term = UniPoly([c], var)
                for a in la:
                    if a not in part_val:
                        s = UniPoly([], var)
                        for v, mlt in groups:
                            s = s + (v ** a).scale(mlt)
                        part_val[a] = s
                    term = term * part_val[a]
                acc = acc + term
        else:
            acc = UniPoly([], var)
            for la, c in convert(sym, "m").coeffs.items():
                acc = acc + _m_at_groups(la, groups, var).scale(c)
        if k:
            acc = acc * zv ** k
        total = total + acc
    return total
