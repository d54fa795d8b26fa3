"""Exact coefficients: rationals and truncated multivariate power series.

Rationals are :class:`fractions.Fraction`.  A :class:`TruncatedSeries` lives
in ``Q[[z_1..z_k]] / (z)^(N+1)``; the ring is named by a :class:`SeriesRing`
carrying ``k`` and ``N``.  Series are immutable and hashable.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

from ._backend import mul_truncated

Rational = Fraction

DEFAULT_TRUNC = int(os.environ.get("HECKEO_TRUNC", "2"))


class RingMismatchError(ValueError):
    pass


class NonUnitError(ArithmeticError):
    """Raised when inverting a series whose constant term vanishes."""


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def grlex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class SeriesRing:
    num_vars: int
    trunc_degree: int = DEFAULT_TRUNC

    def __post_init__(self):
        if self.num_vars < 0 or self.trunc_degree < 0:
            raise ValueError("ring parameters must be non-negative")

    @cached_property
    def monomials(self) -> tuple:
        """All exponent vectors of degree <= N, graded-lex."""
        k = self.num_vars
        out = []
        for d in range(self.trunc_degree + 1):
            for combo in combinations_with_replacement(range(k), d):
                e = [0] * k
                for i in combo:
                    e[i] += 1
                out.append(tuple(e))
        if k == 0:
            out = [()]
        return tuple(sorted(set(out), key=grlex_key))

    @cached_property
    def monomial_index(self) -> dict:
        return {e: i for i, e in enumerate(self.monomials)}

    @property
    def dim(self) -> int:
        """Dimension of the truncated ring over Q."""
        return len(self.monomials)

    @property
    def zero_exps(self) -> tuple:
        return (0,) * self.num_vars

    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def one(self) -> "TruncatedSeries":
        return self.const(1)

    def const(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self, {self.zero_exps: Fraction(c)})

    def var(self, i: int) -> "TruncatedSeries":
        """The variable z_i, 1-based."""
        if not 1 <= i <= self.num_vars:
            raise IndexError(f"no variable z{i} in {self}")
        e = [0] * self.num_vars
        e[i - 1] = 1
        return TruncatedSeries(self, {tuple(e): Fraction(1)})

    def coerce(self, x) -> "TruncatedSeries":
        if isinstance(x, TruncatedSeries):
            if x.ring != self:
                raise RingMismatchError(f"{x.ring} vs {self}")
            return x
        return self.const(x)

    def truncated(self, trunc: int) -> "SeriesRing":
        return SeriesRing(self.num_vars, trunc)


class TruncatedSeries:
    __slots__ = ("ring", "_c", "_hash")

    def __init__(self, ring: SeriesRing, coeffs=None):
        self.ring = ring
        c = {}
        if coeffs:
            n = ring.trunc_degree
            k = ring.num_vars
            for e, v in coeffs.items():
                e = tuple(e)
                if len(e) != k:
                    raise ValueError(f"exponent {e} has wrong length for {ring}")
                if sum(e) > n or not v:
                    continue
                c[e] = Fraction(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, ring, c):
        s = object.__new__(cls)
        s.ring = ring
        s._c = c
        s._hash = None
        return s

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coeff(self, exps) -> Fraction:
        return self._c.get(tuple(exps), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._c.get(self.ring.zero_exps, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and self.ring.zero_exps in self._c)

    def order(self):
        """Lowest total degree carrying a nonzero coefficient (None for 0)."""
        if not self._c:
            return None
        return min(sum(e) for e in self._c)

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return TruncatedSeries._raw(self.ring, c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(self.ring, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TruncatedSeries._raw(self.ring, {})
            return TruncatedSeries._raw(self.ring, {e: v * other for e, v in self._c.items()})
        other = self._other(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries._raw(
            self.ring, mul_truncated(self._c, other._c, self.ring.trunc_degree)
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def invert(self) -> "TruncatedSeries":
        return series_invert(self)

    # -- ring maps --------------------------------------------------------
    def truncate(self, trunc: int) -> "TruncatedSeries":
        """Image under the projection to a lower truncation degree."""
        if trunc > self.ring.trunc_degree:
            raise ValueError("can only truncate to a lower degree")
        ring = self.ring.truncated(trunc)
        return TruncatedSeries._raw(ring, {e: v for e, v in self._c.items() if sum(e) <= trunc})

    def specialize(self) -> "TruncatedSeries":
        """Set every z_i to 0 (same ring, N = 0)."""
        return self.truncate(0)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.ring == other.ring and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._c.items())))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, key=grlex_key):
            v = self._c[e]
            mono = "*".join(
                f"z{i + 1}" if p == 1 else f"z{i + 1}^{p}" for i, p in enumerate(e) if p
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list:
        return [
            {"exponents": list(e), "coeff": format_rational(self._c[e])}
            for e in sorted(self._c, key=grlex_key)
        ]

    @classmethod
    def from_json(cls, ring: SeriesRing, data) -> "TruncatedSeries":
        return cls(ring, {tuple(t["exponents"]): parse_rational(t["coeff"]) for t in data})


def _check_same(a: TruncatedSeries, b: TruncatedSeries):
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same(a, b)
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same(a, b)
    return a * b


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse in the truncated ring via the geometric series in the maximal ideal."""
    c0 = a.constant_term
    if not c0:
        raise NonUnitError(f"{a!r} has zero constant term")
    ring = a.ring
    inv0 = 1 / c0
    # a = c0 (1 - t), t in the maximal ideal, so a^-1 = c0^-1 sum_k t^k
    t = ring.one() - a * inv0
    out = ring.one()
    power = ring.one()
    for _ in range(ring.trunc_degree):
        power = power * t
        if power.is_zero():
            break
        out = out + power
    return out * inv0
