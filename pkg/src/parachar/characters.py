"""Character and highest-weight formulas for the W(2,3) algebra at c = -10
and the level -3/2 parafermion cosets of sl(2) and sl(3).

Conventions
-----------
Characters are graded dimensions ch[M](q) = tr_M q^(L(0)); the conformal
anomaly prefactor q^(-c/24) is omitted everywhere (the CLI can add it back
in output formatting).  All heads of infinite sums grow quadratically in
the summation index, and each generator states its stopping bound; that is
what makes every value here exact below the requested truncation order.

Highest weights (h, beta) of W(2,3) modules follow the lattice-realization
normalization of the weight-3 generator.  Rescaling that generator by
4*sqrt(2)/27 converts to the normalization of w23_bracket_coeffs; beta is
kept unrescaled so that all stored values stay rational.

Every formula is its own generator: agreeing values from two generators is
evidence precisely because they share no formula code (see the verify
module for the identity registry).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import bivar as bv
from . import lie_a2
from . import qseries as qs
from .qseries import EXPONENT_DENOMINATOR as _D
from .qseries import ExponentLike, QSeries, _scaled


# -- conformal data and bracket coefficients ---------------------------------


def central_charge_p(p: int) -> Fraction:
    """Central charge 2 - 24(p-1)^2/p of the lattice conformal structure."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return 2 - Fraction(24 * (p - 1) ** 2, p)


def central_charge_k(k) -> Fraction:
    """Central charge 2 - 24(k+2)^2/(k+3) of the principal W-algebra of sl(3)."""
    k = Fraction(k)
    if k == -3:
        raise ValueError("central charge has a pole at level k = -3")
    return 2 - 24 * (k + 2) ** 2 / (k + 3)


class BracketCoefficients(NamedTuple):
    """Exact coefficients in [W(m), W(n)] = central*delta_(m+n,0)
    + lambda_coeff*Lambda_(m+n) + l_coeff*L(m+n), where
    Lambda = L(-2)^2 1 - (3/5) L(-4) 1."""

    central: Fraction
    lambda_coeff: Fraction
    l_coeff: Fraction


def w23_bracket_coeffs(c, m: int, n: int) -> BracketCoefficients:
    """Structure constants of the bracket of two weight-3 modes at charge c."""
    c = Fraction(c)
    central = (
        Fraction((22 + 5 * c) * c, 48 * 3 * 120)
        * (m * m - 4) * (m * m - 1) * m
    )
    lambda_coeff = Fraction(m - n, 3)
    l_coeff = (
        Fraction((22 + 5 * c) * (m - n), 48 * 30)
        * (2 * m * m - m * n + 2 * n * n - 8)
    )
    return BracketCoefficients(central, lambda_coeff, l_coeff)


class HighestWeightData(NamedTuple):
    """(L(0), W(0)) eigenvalues on a highest weight vector, with the lattice
    parameter p recorded."""

    h: Fraction
    beta: Fraction
    p: int


def highest_weight(p: int, m: int, n: int) -> HighestWeightData:
    """General-p highest weight of the module attached to m*w1 + n*w2:

        h    = (p/3)(m^2 + n^2 + mn) + (p-1)(m+n)
        beta = (m-n)(-3+3p+2mp+np)(-3+3p+mp+2np) / (2p^2)
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    h = Fraction(p, 3) * (m * m + n * n + m * n) + (p - 1) * (m + n)
    beta = Fraction(
        (m - n) * (-3 + 3 * p + 2 * m * p + n * p) * (-3 + 3 * p + m * p + 2 * n * p),
        2 * p * p,
    )
    return HighestWeightData(h, beta, p)


def highest_weight_p2(m: int, n: int) -> HighestWeightData:
    """Closed p = 2 form (central charge -10), coded independently of
    highest_weight:

        h    = (2/3)(m^2 + n^2 + mn) + m + n
        beta = (1/8)(m-n)(3+4m+2n)(3+2m+4n)
    """
    h = Fraction(2 * (m * m + n * n + m * n), 3) + m + n
    beta = Fraction((m - n) * (3 + 4 * m + 2 * n) * (3 + 2 * m + 4 * n), 8)
    return HighestWeightData(h, beta, 2)


# -- shared arithmetic helpers ------------------------------------------------


@lru_cache(maxsize=None)
def _inv_qq_sq(order: ExponentLike) -> QSeries:
    """1/(q;q)_inf^2, the two-boson denominator of every character here."""
    p = qs.pochhammer_q(None, order)
    return (p * p).invert()


def _signed_product(lead_scaled: int, offsets: list[int], ns: int) -> dict[int, int]:
    """Expand q^lead * prod_k (1 - q^k) into a scaled coefficient dict,
    dropping exponents at or above ns."""
    terms = {lead_scaled: 1} if lead_scaled < ns else {}
    for k in offsets:
        ks = k * _D
        nxt: dict[int, int] = {}
        for e, v in terms.items():
            nxt[e] = nxt.get(e, 0) + v
            if e + ks < ns:
                nxt[e + ks] = nxt.get(e + ks, 0) - v
        terms = {e: v for e, v in nxt.items() if v}
    return terms


def _merge(acc: dict[int, int], extra: dict[int, int], weight: int = 1) -> None:
    for e, v in extra.items():
        w = acc.get(e, 0) + weight * v
        if w:
            acc[e] = w
        elif e in acc:
            del acc[e]


def _h_scaled(m: int, n: int) -> int:
    # 6 * [(2/3)(m^2+n^2+mn) + m + n]
    return 4 * (m * m + n * n + m * n) + 6 * (m + n)


# -- W(2,3) module characters --------------------------------------------------


def ch_w23_product(m: int, n: int, order: ExponentLike) -> QSeries:
    """Product form of the W(2,3)_(c=-10) module character for (m, n):

        q^h (1-q^(m+1)) (1-q^(n+1)) (1-q^(m+n+2)) / (q;q)_inf^2,

    with h = (2/3)(m^2+n^2+mn) + m + n.
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    ns = _scaled(order)
    num = _signed_product(_h_scaled(m, n), [m + 1, n + 1, m + n + 2], ns)
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


def ch_w23_weylsum(m: int, n: int, order: ExponentLike) -> QSeries:
    """Weyl alternating-sum form of the same character:

        q^D sum_w sign(w) q^(-<w(lam+rho), rho>) / (q;q)_inf^2,

    where lam = m*w1 + n*w2 and D = (1/(2k))(lam, lam+2rho) + (rho, rho) at
    the coupling k = 1/2.  The six orbit exponents all lie at or above the
    module's lowest weight h, so truncation below the order is exact.
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    ns = _scaled(order)
    lam = (m, n)
    # (1/(2k)) = 1 at k = 1/2
    delta = lie_a2.pairing(lam, (m + 2, n + 2)) + lie_a2.pairing(lie_a2.RHO, lie_a2.RHO)
    num: dict[int, int] = {}
    for w in lie_a2.weyl_group():
        e = delta - lie_a2.pairing(w.apply((m + 1, n + 1)), lie_a2.RHO)
        es = _scaled(Fraction(e))
        if es < ns:
            _merge(num, {es: w.sign})
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


# -- sl(2) parafermion characters ----------------------------------------------


def ch_para_sl2_ct(order: ExponentLike) -> QSeries:
    """Constant-term form of the sl(2) parafermion character:

        CT_x 1/((xq;q)_inf (x^-1 q;q)_inf).
    """
    return bv.double_pochhammer_inv(order).constant_term()


def ch_para_sl2_theta(order: ExponentLike) -> QSeries:
    """False-theta form: (Phi_0(q) - Phi_(-1)(q)) / (q;q)_inf^2."""
    num = qs.false_theta(0, order) - qs.false_theta(-1, order)
    return num * _inv_qq_sq(order)


def ch_para_sl2_tripleprod(order: ExponentLike) -> QSeries:
    """Telescoping triple-product form:

        sum_{m>=1} q^(2m(m-1)) (1-q^m)^2 (1-q^(2m)) / (q;q)_inf^2.

    The head exponent 2m(m-1) is increasing, so the sum stops at the first
    m with 2m(m-1) >= order.
    """
    ns = _scaled(order)
    num: dict[int, int] = {}
    m = 1
    while 12 * m * (m - 1) < ns:
        _merge(num, _signed_product(12 * m * (m - 1), [m, m, 2 * m], ns))
        m += 1
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


def ch_para_sl2_qhyp(order: ExponentLike) -> QSeries:
    """q-hypergeometric form: sum_{n>=0} q^(2n) / (q;q)_n^2.

    The n-th summand has lowest exponent 2n, so the sum stops at 2n >= order.
    """
    ns = _scaled(order)
    o = qs._unscaled(ns)
    acc = QSeries._raw({}, ns)
    inv_poch = qs.one(o)  # 1/(q)_n, grown one factor at a time
    n = 0
    while 12 * n < ns:
        if n > 0:
            inv_poch = inv_poch * QSeries._raw(
                {j * n * _D: 1 for j in range(0, -(-ns // (n * _D)))}, ns
            )
        acc = acc + (inv_poch * inv_poch).shift(2 * n)
        n += 1
    return acc


def ch_para_sl2_w23sum(order: ExponentLike) -> QSeries:
    """Decomposition form: the sum of the diagonal W(2,3)-module characters

        sum_{m>=0} ch[(m, m)] with lowest weights h_(m,m) = 2m(m+1),

    stopping at the first m with 2m(m+1) >= order.
    """
    ns = _scaled(order)
    num: dict[int, int] = {}
    m = 0
    while 12 * m * (m + 1) < ns:
        _merge(num, _signed_product(_h_scaled(m, m), [m + 1, m + 1, 2 * m + 2], ns))
        m += 1
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


# -- sl(2) parafermion module characters ---------------------------------------


def ch_para_sl2_mod_ct(s: int, order: ExponentLike) -> QSeries:
    """Constant-term form of the parafermion module character for charge 2s:

        q^(2s(s+1)) CT_x (x^-s + ... + x^s) / ((xq;q)_inf (x^-1 q;q)_inf).
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    prod = bv.double_pochhammer_inv(order)
    ct = prod.mul_x_poly(bv.sl2_weight_poly(s)).constant_term()
    return ct.shift(2 * s * (s + 1))


def ch_para_sl2_mod_theta(s: int, order: ExponentLike) -> QSeries:
    """False-theta form of the same character:

        q^(2s(s+1)) (Phi_0 + Phi_(-1) - 2 Phi_(-s-1)) / (q;q)_inf^2.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    num = (
        qs.false_theta(0, order)
        + qs.false_theta(-1, order)
        - 2 * qs.false_theta(-s - 1, order)
    )
    return (num * _inv_qq_sq(order)).shift(2 * s * (s + 1))


# -- string function polynomials ------------------------------------------------


def f_poly(m: int, n: int, order: ExponentLike) -> QSeries:
    """The polynomial piece F_(m,n) = q^l (1-q^m)(1-q^n)(1-q^(m+n)) with
    l = (2/3)(m^2+n^2+mn) - m - n, truncated."""
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    ns = _scaled(order)
    lead = 4 * (m * m + n * n + m * n) - 6 * (m + n)
    return QSeries._raw(_signed_product(lead, [m, n, m + n], ns), ns)


def g_s(s: int, order: ExponentLike) -> QSeries:
    """The grouped sum G_s = sum_{m>=s+1} F_(m,m)
    + sum_{1<=i<=s, m>=i} (F_(m,m+3(s+1-i)) + F_(m+3(s+1-i),m)).

    Each F head exponent grows quadratically in m, so both sums stop at the
    first m whose head is at or past the order.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    ns = _scaled(order)
    acc = QSeries._raw({}, ns)
    m = s + 1
    while 12 * m * (m - 1) < ns:  # head of F_(m,m) is 2m(m-1)
        acc = acc + f_poly(m, m, order)
        m += 1
    for i in range(1, s + 1):
        d = 3 * (s + 1 - i)
        m = i
        while 4 * (m * m + (m + d) ** 2 + m * (m + d)) - 6 * (2 * m + d) < ns:
            acc = acc + f_poly(m, m + d, order) + f_poly(m + d, m, order)
            m += 1
    return acc


# -- sl(3) parafermion (vacuum) characters --------------------------------------


def ch_para_sl3_minsum(order: ExponentLike) -> QSeries:
    """Minimum-multiplicity double sum for the sl(3) parafermion character:

        sum_{m,n>=0, m=n mod 3} min(m+1, n+1)
            q^h (1-q^(m+1))(1-q^(n+1))(1-q^(m+n+2)) / (q;q)_inf^2.

    h = h_(m,n) is increasing in each argument, so the outer loop stops once
    h_(m,0) >= order and the inner loop once h_(m,n) >= order.
    """
    ns = _scaled(order)
    num: dict[int, int] = {}
    m = 0
    while _h_scaled(m, 0) < ns:
        n = m % 3
        while _h_scaled(m, n) < ns:
            _merge(
                num,
                _signed_product(_h_scaled(m, n), [m + 1, n + 1, m + n + 2], ns),
                weight=min(m + 1, n + 1),
            )
            n += 3
        m += 1
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


def ch_para_sl3_signed(order: ExponentLike) -> QSeries:
    """Signed double sum for the same character:

        sum_{n1>=0, n2 in Z} sgn(n2) (-1)^n1
            q^(n1(n1+1)/2 + n1 n2 + 2 n2^2 + 2 n2) / (q;q)_inf^2,

    with sgn(n2) = 1 for n2 >= 0 and -1 for n2 < 0.  For n2 = -t < 0 the
    exponent is minimized at 3t(t-1)/2 (attained near n1 = t), so n2 ranges
    over a finite window; for each n2 the exponent is eventually increasing
    in n1 and the inner loop stops once past the order on that tail.
    """
    ns = _scaled(order)
    num: dict[int, int] = {}

    def exponent(n1: int, n2: int) -> int:
        return 3 * n1 * (n1 + 1) + 6 * n1 * n2 + 12 * n2 * n2 + 12 * n2

    n2 = 0
    while 12 * n2 * n2 + 12 * n2 < ns:  # min over n1 is at n1 = 0 for n2 >= 0
        n1 = 0
        while True:
            e = exponent(n1, n2)
            if e >= ns:
                break  # increasing in n1 for n2 >= 0
            _merge(num, {e: -1 if n1 & 1 else 1})
            n1 += 1
        n2 += 1
    t = 1
    while 9 * t * (t - 1) < ns:  # min over n1 of the n2 = -t branch: 3t(t-1)/2
        n1 = 0
        while True:
            e = exponent(n1, -t)
            if e >= ns:
                if n1 >= t:
                    break  # increasing in n1 from n1 = t on
            else:
                _merge(num, {e: 1 if n1 & 1 else -1})  # sgn = -1 times (-1)^n1
            n1 += 1
        t += 1
    return QSeries._raw(num, ns) * _inv_qq_sq(order)


def ch_para_sl3_branch(order: ExponentLike) -> QSeries:
    """Branching form: the sum over all sl(2) parafermion module characters,

        sum_{s>=0} ch[charge 2s],

    stopping at the first s with head 2s(s+1) >= order.
    """
    ns = _scaled(order)
    acc = QSeries._raw({}, ns)
    s = 0
    while 12 * s * (s + 1) < ns:
        acc = acc + ch_para_sl2_mod_theta(s, order)
        s += 1
    return acc


def ch_octuplet(order: ExponentLike) -> QSeries:
    """Graded dimension of the full rank-2 triplet-type algebra:

        sum_{m,n>=0, m=n mod 3} dim V_sl(3)(m,n) * ch[(m, n)],

    the multiplicity of each W(2,3)-module being the dimension of its
    sl(3)-multiplet.  Same stopping bounds as ch_para_sl3_minsum.
    """
    ns = _scaled(order)
    num: dict[int, int] = {}
    m = 0
    while _h_scaled(m, 0) < ns:
        n = m % 3
        while _h_scaled(m, n) < ns:
            _merge(
                num,
                _signed_product(_h_scaled(m, n), [m + 1, n + 1, m + n + 2], ns),
                weight=lie_a2.dim((m, n)),
            )
            n += 3
        m += 1
    return QSeries._raw(num, ns) * _inv_qq_sq(order)
