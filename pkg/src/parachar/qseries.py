"""Exact truncated Laurent series in the formal variable q.

Every series in this package is exact: coefficients are Python big integers
and exponents are rationals whose denominator divides EXPONENT_DENOMINATOR
(fixed at 6, enough for the thirds coming from conformal weights in (1/3)Z
and the halves of intermediate theta shifts).  A series carries a truncation
order: coefficients at exponents >= the order are *unknown*, not zero, and
asking for one raises UnknownCoefficientError.  That convention turns
truncation bugs into loud errors instead of silently wrong identities.

Values are immutable after construction; operations are pure functions, so
series may be shared freely (including across threads and lru_caches).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Union

EXPONENT_DENOMINATOR = 6

ExponentLike = Union[int, Fraction]


class QSeriesError(Exception):
    """Base class for q-series arithmetic errors."""


class UnknownCoefficientError(QSeriesError):
    """A coefficient at or above the truncation order was requested."""


class NotInvertibleError(QSeriesError):
    """Inversion requires lowest term q^0 with coefficient +-1."""


def _scaled(e: ExponentLike) -> int:
    """Convert an exponent to the internal integer scale (times 6)."""
    if isinstance(e, int):
        return e * EXPONENT_DENOMINATOR
    if isinstance(e, Fraction):
        s = e * EXPONENT_DENOMINATOR
        if s.denominator != 1:
            raise ValueError(
                f"exponent {e} is not a multiple of 1/{EXPONENT_DENOMINATOR}"
            )
        return s.numerator
    raise TypeError(f"exponent must be int or Fraction, got {type(e).__name__}")


def _unscaled(s: int) -> Fraction:
    return Fraction(s, EXPONENT_DENOMINATOR)


class QSeries:
    """Sparse Laurent series in q, exact below a truncation order.

    The constructor accepts a mapping (or iterable of pairs) from exponents
    to integer coefficients.  Exponents may be negative; all must lie
    strictly below ``order``.
    """

    __slots__ = ("_c", "_n")

    def __init__(
        self,
        coeffs: Mapping[ExponentLike, int] | Iterable[tuple[ExponentLike, int]],
        order: ExponentLike,
    ):
        n = _scaled(order)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if not isinstance(v, int):
                raise TypeError(f"coefficient must be int, got {type(v).__name__}")
            if v == 0:
                continue
            es = _scaled(e)
            if es >= n:
                raise ValueError(
                    f"term q^{_unscaled(es)} at or above the truncation order "
                    f"{_unscaled(n)}"
                )
            c[es] = c.get(es, 0) + v
        self._c = {e: v for e, v in c.items() if v}
        self._n = n

    @classmethod
    def _raw(cls, coeffs: dict[int, int], order_scaled: int) -> "QSeries":
        """Internal constructor from already-scaled, zero-free data."""
        self = object.__new__(cls)
        self._c = coeffs
        self._n = order_scaled
        return self

    # -- inspection ---------------------------------------------------------

    @property
    def order(self) -> Fraction:
        """Exclusive truncation order: terms at exponent >= order are unknown."""
        return _unscaled(self._n)

    @property
    def order_scaled(self) -> int:
        return self._n

    def coeff(self, e: ExponentLike) -> int:
        """Coefficient of q^e; zero for absent terms below the order."""
        es = _scaled(e)
        if es >= self._n:
            raise UnknownCoefficientError(
                f"coefficient of q^{e} is above the truncation order {self.order}"
            )
        return self._c.get(es, 0)

    def terms(self) -> list[tuple[Fraction, int]]:
        """Sorted (exponent, coefficient) pairs of the stored support."""
        return [(_unscaled(e), v) for e, v in sorted(self._c.items())]

    def terms_scaled(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def min_exponent(self) -> Fraction | None:
        return _unscaled(min(self._c)) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._n == other._n and self._c == other._c

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self._c:
            return f"QSeries(0 + O(q^{self.order}))"
        parts = []
        for e, v in self.terms()[:8]:
            parts.append(f"{v}*q^({e})" if e else f"{v}")
        tail = " + ..." if len(self._c) > 8 else ""
        return f"QSeries({' + '.join(parts)}{tail} + O(q^{self.order}))"

    # -- ring operations ----------------------------------------------------

    def _lift(self, k: int) -> "QSeries":
        # Integer scalars act as k*q^0, truncated like self.
        if self._n <= 0:
            return QSeries._raw({}, self._n)
        return QSeries._raw({0: k} if k else {}, self._n)

    def __add__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            other = self._lift(other)
        elif not isinstance(other, QSeries):
            return NotImplemented
        n = min(self._n, other._n)
        c = {e: v for e, v in self._c.items() if e < n}
        for e, v in other._c.items():
            if e >= n:
                continue
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        return QSeries._raw(c, n)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw({e: -v for e, v in self._c.items()}, self._n)

    def __sub__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            other = self._lift(other)
        elif not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "QSeries":
        return self._lift(other) + (-self)

    def __mul__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            if other == 0:
                return QSeries._raw({}, self._n)
            return QSeries._raw({e: other * v for e, v in self._c.items()}, self._n)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self._n, other._n)
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        bs = sorted(b.items())
        c: dict[int, int] = {}
        for e1, v1 in a.items():
            for e2, v2 in bs:
                e = e1 + e2
                if e >= n:
                    break  # bs is sorted, later terms only larger
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        return QSeries._raw(c, n)

    __rmul__ = __mul__

    def invert(self) -> "QSeries":
        """Multiplicative inverse, for series whose lowest term is +-1 * q^0."""
        if not self._c or min(self._c) != 0 or self._c[0] not in (1, -1):
            raise NotInvertibleError(
                "inversion requires lowest term q^0 with coefficient +1 or -1"
            )
        a0 = self._c[0]
        pos = [(e, v) for e, v in sorted(self._c.items()) if e > 0]
        b: dict[int, int] = {0: a0}
        for e in range(1, self._n):
            s = 0
            for f, v in pos:
                if f > e:
                    break
                t = b.get(e - f)
                if t:
                    s += v * t
            if s:
                b[e] = -a0 * s
        return QSeries._raw(b, self._n)

    def truncate(self, new_order: ExponentLike) -> "QSeries":
        """Drop terms at or above new_order and lower the truncation order."""
        ns = _scaled(new_order)
        if ns > self._n:
            raise ValueError(
                f"cannot raise the truncation order ({self.order} -> {_unscaled(ns)})"
            )
        return QSeries._raw({e: v for e, v in self._c.items() if e < ns}, ns)

    def shift(self, delta: ExponentLike) -> "QSeries":
        """Multiply by q^delta, keeping the truncation order fixed.

        Terms pushed to or above the order are dropped (they are unknown
        territory at this order), so ``shift`` agrees with multiplication by
        the monomial whenever the monomial is representable.
        """
        d = _scaled(delta)
        c = {e + d: v for e, v in self._c.items() if e + d < self._n}
        return QSeries._raw(c, self._n)


# -- constructors ------------------------------------------------------------


def make_monomial(exponent: ExponentLike, coefficient: int, order: ExponentLike) -> QSeries:
    """The series coefficient * q^exponent + O(q^order)."""
    es, n = _scaled(exponent), _scaled(order)
    if es >= n:
        raise ValueError(
            f"monomial exponent {exponent} not below the truncation order {order}"
        )
    return QSeries._raw({es: coefficient} if coefficient else {}, n)


def zero(order: ExponentLike) -> QSeries:
    return QSeries._raw({}, _scaled(order))


def one(order: ExponentLike) -> QSeries:
    return make_monomial(0, 1, order)


@lru_cache(maxsize=None)
def pochhammer_q(n: int | None, order: ExponentLike) -> QSeries:
    """The q-Pochhammer product (q;q)_n = prod_{i=1}^{n}(1 - q^i).

    ``n=None`` means the infinite product (q;q)_inf.  Factors (1 - q^i) with
    i >= order cannot touch coefficients below the order, so the product is
    cut there; this makes the infinite case finite and keeps the finite case
    exact below the order.
    """
    if n is not None and n < 0:
        raise ValueError("pochhammer_q requires n >= 0 (or None for infinity)")
    ns = _scaled(order)
    if ns <= 0:
        return QSeries._raw({}, ns)
    acc = one(order)
    i = 1
    while i * EXPONENT_DENOMINATOR < ns and (n is None or i <= n):
        acc = acc * QSeries._raw({0: 1, i * EXPONENT_DENOMINATOR: -1}, ns)
        i += 1
    return acc


@lru_cache(maxsize=None)
def false_theta(m: int, order: ExponentLike) -> QSeries:
    """Unary false theta Phi_m(q) = sum_{r>=0} (-1)^r q^(r(r+1)/2 + m r).

    Defined by the sum for m <= 0 and by Phi_m = Phi_(-m) for m > 0.  For
    m <= 0 the summand exponents dip below zero for r < -m and cancel in
    pairs (r against -2m-1-r); the exponent is strictly increasing once
    r >= -m, so summation stops at the first such r at or past the order.
    """
    if m > 0:
        return false_theta(-m, order)
    ns = _scaled(order)
    c: dict[int, int] = {}
    r = 0
    while True:
        e = 3 * r * (r + 1) + 6 * m * r  # scaled r(r+1)/2 + m*r
        if e >= ns:
            if r >= -m:
                break
        else:
            w = c.get(e, 0) + (-1 if r & 1 else 1)
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        r += 1
    return QSeries._raw(c, ns)
