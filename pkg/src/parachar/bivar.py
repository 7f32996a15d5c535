"""Two-variable series: Laurent polynomials in x with QSeries coefficients.

These carry characters of affine sl(2)-modules expanded in the annulus
|q| < |x| < 1, where positive powers of x pair with 1/(xq;q)_inf and
negative powers with 1/(x^-1 q;q)_inf.  The parafermion characters are the
constant terms (x^0 coefficients) of such series.

In this expansion regime x^(+-n) always arrives together with q^(>=n), so
the x-support of every series built here is finite once the q-order is
fixed.  Values are immutable; operations are pure.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache

from . import qseries as qs
from .qseries import ExponentLike, QSeries, _scaled


class BivarSeries:
    """Finite map x-exponent -> QSeries, all truncated at one q-order."""

    __slots__ = ("_x", "_n")

    def __init__(self, slices: Mapping[int, QSeries], order: ExponentLike):
        n = _scaled(order)
        x: dict[int, QSeries] = {}
        for m, f in slices.items():
            if f.order_scaled < n:
                raise ValueError(
                    f"slice x^{m} is only known below q^{f.order}, "
                    f"cannot claim order {qs._unscaled(n)}"
                )
            g = f.truncate(qs._unscaled(n)) if f.order_scaled > n else f
            if not g.is_zero():
                x[int(m)] = g
        self._x = x
        self._n = n

    @classmethod
    def _raw(cls, slices: dict[int, QSeries], order_scaled: int) -> "BivarSeries":
        self = object.__new__(cls)
        self._x = slices
        self._n = order_scaled
        return self

    # -- inspection ---------------------------------------------------------

    @property
    def q_order(self):
        return qs._unscaled(self._n)

    def x_support(self) -> list[int]:
        return sorted(self._x)

    def coeff_x(self, m: int) -> QSeries:
        """The x^m coefficient, a QSeries at this series' q-order."""
        f = self._x.get(m)
        return f if f is not None else QSeries._raw({}, self._n)

    def constant_term(self) -> QSeries:
        """The x^0 coefficient (the CT_x operator in the |q|<|x|<1 regime)."""
        f = self._x.get(0)
        return f if f is not None else QSeries._raw({}, self._n)

    def is_zero(self) -> bool:
        return not self._x

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarSeries):
            return NotImplemented
        return self._n == other._n and self._x == other._x

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        supp = self.x_support()
        return f"BivarSeries(x-support {supp[:9]}, O(q^{self.q_order}))"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "BivarSeries") -> "BivarSeries":
        if not isinstance(other, BivarSeries):
            return NotImplemented
        n = min(self._n, other._n)
        out: dict[int, QSeries] = {
            m: (f.truncate(qs._unscaled(n)) if f.order_scaled > n else f)
            for m, f in self._x.items()
        }
        for m, f in other._x.items():
            g = out.get(m)
            h = f + g if g is not None else f.truncate(qs._unscaled(n))
            if h.is_zero():
                out.pop(m, None)
            else:
                out[m] = h
        return BivarSeries._raw({m: f for m, f in out.items() if not f.is_zero()}, n)

    def __neg__(self) -> "BivarSeries":
        return BivarSeries._raw({m: -f for m, f in self._x.items()}, self._n)

    def __sub__(self, other: "BivarSeries") -> "BivarSeries":
        return self + (-other)

    def __mul__(self, other: "BivarSeries | QSeries | int") -> "BivarSeries":
        if isinstance(other, (QSeries, int)):
            out = {}
            for m, f in self._x.items():
                g = f * other
                if not g.is_zero():
                    out[m] = g
            n = self._n if isinstance(other, int) else min(self._n, other.order_scaled)
            return BivarSeries._raw(
                {m: (f.truncate(qs._unscaled(n)) if f.order_scaled > n else f)
                 for m, f in out.items()},
                n,
            )
        if not isinstance(other, BivarSeries):
            return NotImplemented
        n = min(self._n, other._n)
        out: dict[int, QSeries] = {}
        for m1, f1 in self._x.items():
            for m2, f2 in other._x.items():
                g = f1 * f2
                if g.is_zero():
                    continue
                m = m1 + m2
                h = out.get(m)
                h = g if h is None else h + g
                if h.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = h
        return BivarSeries._raw(out, n)

    __rmul__ = __mul__

    def mul_x_poly(self, poly: Mapping[int, int]) -> "BivarSeries":
        """Multiply by a Laurent polynomial in x with integer coefficients."""
        out: dict[int, QSeries] = {}
        for d, c in poly.items():
            if c == 0:
                continue
            for m, f in self._x.items():
                g = f * c
                h = out.get(m + d)
                h = g if h is None else h + g
                if h.is_zero():
                    out.pop(m + d, None)
                else:
                    out[m + d] = h
        return BivarSeries._raw(out, self._n)

    def truncate(self, new_order: ExponentLike) -> "BivarSeries":
        ns = _scaled(new_order)
        if ns > self._n:
            raise ValueError("cannot raise the q truncation order")
        no = qs._unscaled(ns)
        out = {}
        for m, f in self._x.items():
            g = f.truncate(no)
            if not g.is_zero():
                out[m] = g
        return BivarSeries._raw(out, ns)


def bivar_one(order: ExponentLike) -> BivarSeries:
    return BivarSeries._raw({0: qs.one(order)}, _scaled(order))


@lru_cache(maxsize=None)
def euler_inv_pochhammer(x_sign: int, order: ExponentLike) -> BivarSeries:
    """Euler expansion of 1/(x^(+-1) q; q)_inf = sum_{n>=0} x^(+-n) q^n/(q)_n.

    The n-th summand has lowest q-exponent n, so the sum stops at n = order.
    """
    if x_sign not in (1, -1):
        raise ValueError("x_sign must be +1 or -1")
    ns = _scaled(order)
    if ns <= 0:
        return BivarSeries._raw({}, ns)
    o = qs._unscaled(ns)
    slices: dict[int, QSeries] = {}
    inv_poch = qs.one(o)  # 1/(q)_n, grown one factor at a time
    n = 0
    while n * qs.EXPONENT_DENOMINATOR < ns:
        if n > 0:
            # 1/(1-q^n) = sum_j q^(jn), truncated
            geom = QSeries._raw(
                {j * n * qs.EXPONENT_DENOMINATOR: 1
                 for j in range(0, -(-ns // (n * qs.EXPONENT_DENOMINATOR)))},
                ns,
            )
            inv_poch = inv_poch * geom
        f = inv_poch.shift(n)
        if not f.is_zero():
            slices[x_sign * n] = f
        n += 1
    return BivarSeries._raw(slices, ns)


@lru_cache(maxsize=None)
def double_pochhammer_inv(order: ExponentLike) -> BivarSeries:
    """The two-variable kernel 1/((xq;q)_inf (x^-1 q;q)_inf), expanded."""
    return euler_inv_pochhammer(1, order) * euler_inv_pochhammer(-1, order)


def sl2_weight_poly(s: int) -> dict[int, int]:
    """Character of the (2s+1)-dimensional sl(2)-module as an x-polynomial.

    Equals (x^(s+1/2) - x^(-s-1/2)) / (x^(1/2) - x^(-1/2)) expanded:
    x^-s + x^(-s+1) + ... + x^s.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    return {m: 1 for m in range(-s, s + 1)}


def affine_sl2_char(s: int, order: ExponentLike) -> BivarSeries:
    """Two-variable character of the level -3/2 affine sl(2)-module L(2s w1):

        (x^-s + ... + x^s) q^(2s(s+1)) / ((xq;q)_inf (x^-1 q;q)_inf).
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    numer = double_pochhammer_inv(order).mul_x_poly(sl2_weight_poly(s))
    ns = _scaled(order)
    h = Fraction(12 * s * (s + 1), qs.EXPONENT_DENOMINATOR)  # 2s(s+1)
    out: dict[int, QSeries] = {}
    for m, f in numer._x.items():
        g = f.shift(h)
        if not g.is_zero():
            out[m] = g
    return BivarSeries._raw(out, ns)


@lru_cache(maxsize=None)
def pochhammer_bivar(x_sign: int, order: ExponentLike) -> BivarSeries:
    """The product (x^(+-1) q; q)_inf = prod_{i>=1} (1 - x^(+-1) q^i).

    Factors with i >= order are invisible below the q-order; the x^d slice
    carries q-exponents >= d(d+1)/2, so the x-degree is bounded too.
    """
    if x_sign not in (1, -1):
        raise ValueError("x_sign must be +1 or -1")
    ns = _scaled(order)
    if ns <= 0:
        return BivarSeries._raw({}, ns)
    # slices by |x|-degree d; multiply one binomial (1 - x q^i) at a time:
    # new_d = old_d - q^i * old_(d-1)
    slices: list[QSeries] = [qs.one(qs._unscaled(ns))]
    i = 1
    while i * qs.EXPONENT_DENOMINATOR < ns:
        nxt: list[QSeries] = []
        for d in range(len(slices) + 1):
            f = slices[d] if d < len(slices) else QSeries._raw({}, ns)
            if d > 0:
                f = f - slices[d - 1].shift(i)
            nxt.append(f)
        while nxt and nxt[-1].is_zero():
            nxt.pop()
        slices = nxt
        i += 1
    return BivarSeries._raw(
        {x_sign * d: f for d, f in enumerate(slices) if not f.is_zero()}, ns
    )


def invert_unit(a: BivarSeries) -> BivarSeries:
    """Inverse of a series with x-support in Z>=0, unit x^0 slice, and every
    x^d slice (d >= 1) supported in q-exponents >= 1.

    Solving sum_d A_d B_(m-d) = delta_(m,0) slice by slice; the q-valuation
    condition forces B_m to sit in q-exponents >= m, so slices vanish once
    m reaches the q-order and the recursion stops there.
    """
    supp = sorted(a._x)
    if not supp or supp[0] != 0:
        raise ValueError("invert_unit needs x-support starting at x^0")
    for m in supp[1:]:
        me = a._x[m].min_exponent()
        if me is not None and me < 1:
            raise ValueError("invert_unit needs q-valuation >= 1 on x^d, d >= 1")
    ns = a._n
    b0 = a._x[0].invert()
    out: dict[int, QSeries] = {0: b0}
    pos = [(d, a._x[d]) for d in supp[1:]]
    m = 1
    while m * qs.EXPONENT_DENOMINATOR < ns:
        acc = QSeries._raw({}, ns)
        for d, ad in pos:
            if d > m:
                break
            prev = out.get(m - d)
            if prev is not None:
                acc = acc + ad * prev
        if not acc.is_zero():
            g = -(b0 * acc)
            if not g.is_zero():
                out[m] = g
        m += 1
    return BivarSeries._raw({m: f for m, f in out.items() if not f.is_zero()}, ns)
