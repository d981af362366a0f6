"""Exact polynomial arithmetic over the rationals.

Two representations live here:

``UniPoly``
    dense univariate polynomial, coefficient ``i`` multiplies ``q**i``.
``MultiPoly``
    sparse polynomial in ``x_0, ..., x_{nvars-1}``; a dict from exponent
    tuples to ``Fraction``.

Both are immutable and hashable.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def frac_str(c: Fraction) -> str:
    """Exact string form used in every JSON payload ("3", "-1/3")."""
    return str(c)


class UniPoly:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)
        self.var = var
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar, var: str = "q") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def monomial(cls, j: int, c: Scalar = 1, var: str = "q") -> "UniPoly":
        if j < 0:
            raise ValueError("negative exponent")
        return cls([0] * j + [c], var)

    # basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly([], self.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> "UniPoly":
        c = _frac(c)
        return UniPoly([c * a for a in self.coeffs], self.var)

    def shift(self, j: int) -> "UniPoly":
        """Multiply by ``q**j``."""
        return UniPoly([0] * j + list(self.coeffs), self.var) if self.coeffs else self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"UniPoly({[frac_str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else (self.var if j == 1 else f"{self.var}^{j}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = frac_str(abs(c)) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    # serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "UniPoly":
        return cls([Fraction(c) for c in obj["coeffs"]], obj.get("var", "q"))


def rev_n(f: UniPoly, n: int) -> UniPoly:
    """Return ``q**n * f(1/q)``: the coefficient list ``a_0..a_n`` reversed."""
    if f.degree > n:
        raise ValueError(f"degree {f.degree} exceeds reversal bound {n}")
    padded = list(f.coeffs) + [Fraction(0)] * (n + 1 - len(f.coeffs))
    return UniPoly(reversed(padded), f.var)


class MultiPoly:
    """Sparse polynomial in ``x_0 .. x_{nvars-1}`` with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] = None):
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                c = _frac(c)
                if c != 0:
                    clean[tuple(exp)] = c
        self.terms: Dict[Exponent, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = {e: c for e, c in terms.items() if c != 0}
        obj._hash = None
        return obj

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) - c
        return MultiPoly._raw(self.nvars, out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _frac(c)
        return MultiPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __truediv__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / _frac(c))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # structural operations --------------------------------------------
    def swap(self, i: int, j: int) -> "MultiPoly":
        """Apply the transposition of variables ``x_i`` and ``x_j``."""
        if i == j:
            return self
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            out[tuple(le)] = c
        return MultiPoly._raw(self.nvars, out)

    def euler(self, i: int) -> "MultiPoly":
        """``x_i * d/dx_i``: scale every term by its ``x_i`` exponent."""
        return MultiPoly._raw(self.nvars, {e: c * e[i] for e, c in self.terms.items()})

    def times_var(self, i: int, k: int = 1) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i] += k
            out[tuple(le)] = c
        return MultiPoly._raw(self.nvars, out)

    def coefficient_of(self, i: int, k: int) -> "MultiPoly":
        """Coefficient of ``x_i**k`` (result keeps ``nvars``, with ``x_i`` absent)."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                le = list(e)
                le[i] = 0
                out[tuple(le)] = c
        return MultiPoly._raw(self.nvars, out)

    def set_zero(self, i: int) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if e[i] == 0})

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=ZERO_DEGREE)

    def total_degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degs = self.total_degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def pad(self, nvars: int) -> "MultiPoly":
        """Embed into a ring with more variables (new ones appended)."""
        if nvars < self.nvars:
            raise ValueError("cannot pad to fewer variables")
        extra = (0,) * (nvars - self.nvars)
        return MultiPoly._raw(nvars, {e + extra: c for e, c in self.terms.items()})

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                pieces.append(frac_str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{frac_str(c)}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(e), "coeff": frac_str(self.terms[e])}
                for e in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "MultiPoly":
        return cls(obj["nvars"], {tuple(t["exp"]): Fraction(t["coeff"]) for t in obj["terms"]})


SubValue = Union[None, int, Fraction, UniPoly]


def specialize(p: MultiPoly, values: Sequence[SubValue], var: str = "q"):
    """Ring-homomorphic substitution of variables.

    ``values[i]`` is the image of ``x_i``: ``None`` keeps the variable, a
    number substitutes a constant and a ``UniPoly`` substitutes a polynomial
    in ``q``.  If nothing is kept the result is a ``UniPoly``; otherwise it
    is a ``MultiPoly`` (same variable count, substituted variables removed).
    Mixing kept variables with polynomial images is not supported.
    """
    if len(values) != p.nvars:
        raise ValueError(f"assignment covers {len(values)} of {p.nvars} variables")
    kept = [v is None for v in values]
    if any(kept):
        if any(isinstance(v, UniPoly) for v in values):
            raise ValueError("cannot keep variables and substitute polynomials at once")
        out: Dict[Exponent, Fraction] = {}
        for e, c in p.terms.items():
            coeff = c
            ne = list(e)
            for i, v in enumerate(values):
                if v is not None and e[i]:
                    coeff *= _frac(v) ** e[i]
                    ne[i] = 0
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + coeff
        return MultiPoly._raw(p.nvars, out)

    images = [v if isinstance(v, UniPoly) else UniPoly([v], var) for v in values]
    cache: Dict[Tuple[int, int], UniPoly] = {}

    def power(i: int, k: int) -> UniPoly:
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    # pure monomial images (c*q^j) are by far the common case: add directly
    simple = []
    for img in images:
        nz = [(j, c) for j, c in enumerate(img.coeffs) if c != 0]
        simple.append(nz[0] if len(nz) == 1 else (None if nz else (0, Fraction(0))))
    if all(s is not None for s in simple):
        acc: Dict[int, Fraction] = {}
        for e, c in p.terms.items():
            deg = 0
            coeff = c
            for i, k in enumerate(e):
                if k:
                    j, a = simple[i]
                    deg += j * k
                    coeff *= a ** k
            if coeff:
                acc[deg] = acc.get(deg, 0) + coeff
        top = max(acc, default=-1)
        return UniPoly([acc.get(j, 0) for j in range(top + 1)], var)

    total = UniPoly([], var)
    for e, c in p.terms.items():
        term = UniPoly([c], var)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def q_power(j: int, var: str = "q") -> UniPoly:
    return UniPoly.monomial(j, 1, var)
