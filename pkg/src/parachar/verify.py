"""Registry of character identities with independently computed sides.

Each identity names two builders that compute the same mathematical object
through different formulas (different generators, different summation
shapes).  Exact agreement of big-integer coefficients to the requested
order is the evidence the registry collects; a mismatch is reported with
the first offending exponent and both coefficients.

Identities come in two kinds: "series" identities compare truncated
q-series (possibly a labeled family of them, e.g. one per charge s or per
weight (m, n)), and "grid" identities compare exact rational or integer
values over a parameter grid.  Builders are pure; identities never share
state, so a failure in one cannot disturb another.

Each Identity also declares which distinctive formula operations its two
sides invoke (`lhs_ops`/`rhs_ops`).  For all but two entries these sets are
disjoint; `par-char-step` and `min-sum` overlap by the nature of their
statements (an induction step, and a regrouping of the same polynomials),
which the declarations make explicit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bivar as bv
from . import characters as chars
from . import lie_a2
from . import qseries as qs
from .bivar import BivarSeries
from .qseries import QSeries

Case = tuple[str, object]
Builder = Callable[[int, int | None], list[Case]]


@dataclass(frozen=True)
class Mismatch:
    case: str
    exponent: Fraction | None
    lhs: object
    rhs: object


@dataclass(frozen=True)
class IdentityReport:
    id: str
    order: int
    status: str  # "pass" | "fail"
    first_mismatch: Mismatch | None
    elapsed: float  # seconds


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    statement: str
    kind: str  # "series" | "grid"
    grid_default: int | None
    lhs_ops: frozenset[str]
    rhs_ops: frozenset[str]
    lhs: Builder
    rhs: Builder


# -- comparison ---------------------------------------------------------------


def _compare_qseries(a: QSeries, b: QSeries):
    n = min(a.order_scaled, b.order_scaled)
    ca = dict(a.terms_scaled())
    cb = dict(b.terms_scaled())
    for e in sorted(set(ca) | set(cb)):
        if e >= n:
            break
        va, vb = ca.get(e, 0), cb.get(e, 0)
        if va != vb:
            return ("", Fraction(e, qs.EXPONENT_DENOMINATOR), va, vb)
    return None


def _compare(lhs, rhs):
    """First difference between two side values, or None.

    Returns (case suffix, exponent or None, lhs value, rhs value).
    """
    if isinstance(lhs, QSeries) and isinstance(rhs, QSeries):
        return _compare_qseries(lhs, rhs)
    if isinstance(lhs, BivarSeries) and isinstance(rhs, BivarSeries):
        for m in sorted(set(lhs.x_support()) | set(rhs.x_support())):
            hit = _compare_qseries(lhs.coeff_x(m), rhs.coeff_x(m))
            if hit is not None:
                return (f"x^{m}", hit[1], hit[2], hit[3])
        return None
    if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
        return None if lhs == rhs else ("", None, lhs, rhs)
    raise TypeError(
        f"cannot compare {type(lhs).__name__} against {type(rhs).__name__}"
    )


def run(identity: Identity, order: int, grid: int | None = None) -> IdentityReport:
    """Build both sides of one identity and compare them exactly."""
    if order < 1:
        raise ValueError("order must be >= 1")
    g = grid if grid is not None else identity.grid_default
    start = time.perf_counter()
    lhs_cases = identity.lhs(order, g)
    rhs_cases = identity.rhs(order, g)
    if [c for c, _ in lhs_cases] != [c for c, _ in rhs_cases]:
        raise RuntimeError(f"identity {identity.id}: case labels out of sync")
    mismatch = None
    for (label, lv), (_, rv) in zip(lhs_cases, rhs_cases):
        hit = _compare(lv, rv)
        if hit is not None:
            suffix, exponent, va, vb = hit
            case = " ".join(p for p in (label, suffix) if p)
            mismatch = Mismatch(case, exponent, va, vb)
            break
    elapsed = time.perf_counter() - start
    reported_order = g if identity.kind == "grid" else order
    return IdentityReport(
        id=identity.id,
        order=reported_order,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=elapsed,
    )


def run_identity(identity_id: str, order: int, grid: int | None = None) -> IdentityReport:
    """Run one registered identity by id (KeyError if unknown)."""
    for identity in registry():
        if identity.id == identity_id:
            return run(identity, order, grid)
    raise KeyError(identity_id)


def run_all(order: int, grid: int | None = None) -> list[IdentityReport]:
    """Run every registered identity, in registry order, never stopping early."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return [run(identity, order, grid) for identity in registry()]


# -- side builders ------------------------------------------------------------


def _single(name: str) -> Builder:
    # generators are looked up on the module at call time so that tests can
    # observe (by patching) exactly which formula ops each side invokes
    return lambda order, grid: [("", getattr(chars, name)(order))]


def _s_family(name: str) -> Builder:
    return lambda order, grid: [
        (f"s={s}", getattr(chars, name)(s, order)) for s in range(grid + 1)
    ]


def _inv_qq_sq_local(order) -> QSeries:
    p = qs.pochhammer_q(None, order)
    return (p * p).invert()


def _euler_lhs(order, grid):
    return [("", bv.invert_unit(bv.pochhammer_bivar(1, order)))]


def _euler_rhs(order, grid):
    return [("", bv.euler_inv_pochhammer(1, order))]


def _step_lhs(order, grid):
    prod = bv.double_pochhammer_inv(order)
    psq = qs.pochhammer_q(None, order)
    psq = psq * psq
    out = []
    for s in range(grid + 1):
        ct = prod.mul_x_poly(bv.sl2_weight_poly(s + 1)).constant_term()
        out.append((f"s={s}", psq * ct))
    return out


def _step_rhs(order, grid):
    prod = bv.double_pochhammer_inv(order)
    psq = qs.pochhammer_q(None, order)
    psq = psq * psq
    out = []
    for s in range(grid + 1):
        ct = prod.mul_x_poly(bv.sl2_weight_poly(s)).constant_term()
        corr = 2 * (qs.false_theta(-s - 1, order) - qs.false_theta(-s - 2, order))
        out.append((f"s={s}", psq * ct + corr))
    return out


def _gs_rhs(order, grid):
    psq = qs.pochhammer_q(None, order)
    psq = psq * psq
    return [
        (f"s={s}", psq * chars.ch_para_sl2_mod_theta(s, order))
        for s in range(grid + 1)
    ]


def _minsum_f_lhs(order, grid):
    # sum over m, n >= 1 with m = n mod 3 of min(m,n) F_(m,n); the head
    # exponent of F is increasing in both arguments, so both loops stop
    # once the head passes the order.
    ns = qs._scaled(order)

    def head(m, n):
        return 4 * (m * m + n * n + m * n) - 6 * (m + n)

    acc = QSeries._raw({}, ns)
    m = 1
    while head(m, 1) < ns:
        n = ((m - 1) % 3) + 1  # least n >= 1 with n = m mod 3
        while head(m, n) < ns:
            acc = acc + min(m, n) * chars.f_poly(m, n, order)
            n += 3
        m += 1
    return [("", acc)]


def _minsum_g_rhs(order, grid):
    ns = qs._scaled(order)
    acc = QSeries._raw({}, ns)
    s = 0
    while 12 * s * (s + 1) < ns:  # head of G_s is 2s(s+1)
        acc = acc + chars.g_s(s, order)
        s += 1
    return [("", acc)]


def _tchar_grid(name: str) -> Builder:
    def build(order, grid):
        fn = getattr(chars, name)
        return [
            (f"m={m},n={n}", fn(m, n, order))
            for m in range(grid + 1)
            for n in range(grid + 1)
        ]

    return build


def _coeffx_lhs(order, grid):
    prod = bv.double_pochhammer_inv(order)
    return [(f"m={m}", prod.coeff_x(m)) for m in range(grid + 1)]


def _coeffx_rhs(order, grid):
    inv = _inv_qq_sq_local(order)
    return [
        (
            f"m={m}",
            (qs.false_theta(-m, order) - qs.false_theta(-m - 1, order)) * inv,
        )
        for m in range(grid + 1)
    ]


def _affine_ct_lhs(order, grid):
    return [
        (f"s={s}", bv.affine_sl2_char(s, order).constant_term())
        for s in range(grid + 1)
    ]


def _hw_cases(fn, grid):
    out = []
    for m in range(grid + 1):
        for n in range(grid + 1):
            hw = fn(m, n)
            out.append((f"m={m},n={n} h", hw.h))
            out.append((f"m={m},n={n} beta", hw.beta))
    return out


def _hw_lhs(order, grid):
    return _hw_cases(lambda m, n: chars.highest_weight(2, m, n), grid)


def _hw_rhs(order, grid):
    return _hw_cases(chars.highest_weight_p2, grid)


def _root_lattice_grid(grid):
    return [
        (m, n)
        for m in range(grid + 1)
        for n in range(grid + 1)
        if (m - n) % 3 == 0
    ]


def _weight0_lhs(order, grid):
    return [
        (f"m={m},n={n}", lie_a2.weight_zero_mult((m, n)))
        for m, n in _root_lattice_grid(grid)
    ]


def _weight0_rhs(order, grid):
    return [
        (f"m={m},n={n}", min(m + 1, n + 1)) for m, n in _root_lattice_grid(grid)
    ]


def _gl2_lhs(order, grid):
    return [
        (f"m={m},n={n}", lie_a2.gl2_invariant_dim((m, n)))
        for m in range(grid + 1)
        for n in range(grid + 1)
    ]


def _gl2_rhs(order, grid):
    return [
        (f"m={m},n={n}", 1 if m == n else 0)
        for m in range(grid + 1)
        for n in range(grid + 1)
    ]


# -- the registry --------------------------------------------------------------


def registry() -> list[Identity]:
    """All seventeen registered identities, in fixed order."""
    return [
        Identity(
            id="andrews-ct",
            description="constant-term form of the sl(2) parafermion character "
            "equals the false-theta form",
            statement="CT_x 1/((xq;q)oo (x^-1 q;q)oo) = (Phi_0 - Phi_-1)/(q;q)oo^2",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset(
                {
                    "characters.ch_para_sl2_ct",
                    "bivar.euler_inv_pochhammer",
                    "bivar.constant_term",
                }
            ),
            rhs_ops=frozenset(
                {"characters.ch_para_sl2_theta", "qseries.false_theta"}
            ),
            lhs=_single("ch_para_sl2_ct"),
            rhs=_single("ch_para_sl2_theta"),
        ),
        Identity(
            id="lemma21",
            description="false-theta form equals the telescoping triple-product sum",
            statement="(Phi_0 - Phi_-1)/(q;q)oo^2 = "
            "sum_{m>=1} q^(2m(m-1)) (1-q^m)^2 (1-q^(2m)) / (q;q)oo^2",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset(
                {"characters.ch_para_sl2_theta", "qseries.false_theta"}
            ),
            rhs_ops=frozenset({"characters.ch_para_sl2_tripleprod"}),
            lhs=_single("ch_para_sl2_theta"),
            rhs=_single("ch_para_sl2_tripleprod"),
        ),
        Identity(
            id="qhyp",
            description="q-hypergeometric form equals the false-theta form",
            statement="sum_{n>=0} q^(2n)/(q;q)_n^2 = (Phi_0 - Phi_-1)/(q;q)oo^2",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset({"characters.ch_para_sl2_qhyp"}),
            rhs_ops=frozenset(
                {"characters.ch_para_sl2_theta", "qseries.false_theta"}
            ),
            lhs=_single("ch_para_sl2_qhyp"),
            rhs=_single("ch_para_sl2_theta"),
        ),
        Identity(
            id="euler",
            description="Euler expansion of the inverse Pochhammer product "
            "(bivariate, all x-slices)",
            statement="1/(xq;q)oo = sum_{n>=0} x^n q^n / (q;q)_n",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset({"bivar.pochhammer_bivar", "bivar.invert_unit"}),
            rhs_ops=frozenset({"bivar.euler_inv_pochhammer"}),
            lhs=_euler_lhs,
            rhs=_euler_rhs,
        ),
        Identity(
            id="para-2s",
            description="constant-term and false-theta forms of the charge-2s "
            "parafermion module characters agree",
            statement="q^(2s(s+1)) CT_x (x^-s+...+x^s)/((xq;q)oo (x^-1 q;q)oo) "
            "= q^(2s(s+1)) (Phi_0 + Phi_-1 - 2 Phi_(-s-1))/(q;q)oo^2",
            kind="series",
            grid_default=6,
            lhs_ops=frozenset(
                {
                    "characters.ch_para_sl2_mod_ct",
                    "bivar.euler_inv_pochhammer",
                    "bivar.sl2_weight_poly",
                    "bivar.constant_term",
                }
            ),
            rhs_ops=frozenset(
                {"characters.ch_para_sl2_mod_theta", "qseries.false_theta"}
            ),
            lhs=_s_family("ch_para_sl2_mod_ct"),
            rhs=_s_family("ch_para_sl2_mod_theta"),
        ),
        Identity(
            id="Gs",
            description="grouped F-polynomial sums reproduce the module "
            "characters times (q;q)oo^2",
            statement="G_s = (q;q)oo^2 * q^(2s(s+1)) "
            "(Phi_0 + Phi_-1 - 2 Phi_(-s-1))/(q;q)oo^2",
            kind="series",
            grid_default=6,
            lhs_ops=frozenset({"characters.g_s", "characters.f_poly"}),
            rhs_ops=frozenset(
                {"characters.ch_para_sl2_mod_theta", "qseries.false_theta"}
            ),
            lhs=_s_family("g_s"),
            rhs=_gs_rhs,
        ),
        Identity(
            id="par-char-step",
            description="induction step: widening the weight string by one "
            "adds one false-theta correction",
            statement="(q;q)oo^2 CT_x str(s+1)/((xq)oo(x^-1 q)oo) = "
            "(q;q)oo^2 CT_x str(s)/((xq)oo(x^-1 q)oo) "
            "+ 2(Phi_(-s-1) - Phi_(-s-2))",
            kind="series",
            grid_default=6,
            # Both sides compute the same constant-term machinery (at s+1 and
            # at s): the step relates them by construction.
            lhs_ops=frozenset(
                {
                    "bivar.euler_inv_pochhammer",
                    "bivar.sl2_weight_poly",
                    "bivar.constant_term",
                }
            ),
            rhs_ops=frozenset(
                {
                    "bivar.euler_inv_pochhammer",
                    "bivar.sl2_weight_poly",
                    "bivar.constant_term",
                    "qseries.false_theta",
                }
            ),
            lhs=_step_lhs,
            rhs=_step_rhs,
        ),
        Identity(
            id="min-sum",
            description="each F-polynomial occurs min(m,n) times across all "
            "grouped sums",
            statement="sum_{m,n>=1, m=n mod 3} min(m,n) F_(m,n) = sum_{s>=0} G_s",
            kind="series",
            grid_default=None,
            # Both sides are sums of the same F polynomials; the content is
            # the multiplicity bookkeeping.
            lhs_ops=frozenset({"characters.f_poly"}),
            rhs_ops=frozenset({"characters.g_s", "characters.f_poly"}),
            lhs=_minsum_f_lhs,
            rhs=_minsum_g_rhs,
        ),
        Identity(
            id="T-char",
            description="Weyl alternating sum equals the closed product form "
            "for every W(2,3) module character on the grid",
            statement="q^D sum_w sign(w) q^(-<w(lam+rho),rho>) / (q;q)oo^2 = "
            "q^h (1-q^(m+1))(1-q^(n+1))(1-q^(m+n+2)) / (q;q)oo^2",
            kind="series",
            grid_default=8,
            lhs_ops=frozenset(
                {
                    "characters.ch_w23_weylsum",
                    "lie_a2.pairing",
                    "lie_a2.weyl_group",
                }
            ),
            rhs_ops=frozenset({"characters.ch_w23_product"}),
            lhs=_tchar_grid("ch_w23_weylsum"),
            rhs=_tchar_grid("ch_w23_product"),
        ),
        Identity(
            id="bkmz-branch",
            description="min-multiplicity double sum equals the sum over "
            "sl(2) parafermion branches",
            statement="sum_{m=n mod 3} min(m+1,n+1) q^h (1-q^(m+1))(1-q^(n+1))"
            "(1-q^(m+n+2))/(q;q)oo^2 = sum_{s>=0} ch[charge-2s module]",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset({"characters.ch_para_sl3_minsum"}),
            rhs_ops=frozenset(
                {
                    "characters.ch_para_sl3_branch",
                    "characters.ch_para_sl2_mod_theta",
                    "qseries.false_theta",
                }
            ),
            lhs=_single("ch_para_sl3_minsum"),
            rhs=_single("ch_para_sl3_branch"),
        ),
        Identity(
            id="sgn-form",
            description="signed double sum equals the min-multiplicity double sum",
            statement="sum_{n1>=0, n2 in Z} sgn(n2)(-1)^n1 "
            "q^(n1(n1+1)/2 + n1 n2 + 2 n2^2 + 2 n2) / (q;q)oo^2 "
            "= min-multiplicity double sum",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset({"characters.ch_para_sl3_signed"}),
            rhs_ops=frozenset({"characters.ch_para_sl3_minsum"}),
            lhs=_single("ch_para_sl3_signed"),
            rhs=_single("ch_para_sl3_minsum"),
        ),
        Identity(
            id="coeff-x",
            description="x-coefficients of the double Pochhammer inverse are "
            "false-theta differences",
            statement="Coeff_{x^m} 1/((xq;q)oo (x^-1 q;q)oo) = "
            "(Phi_-m - Phi_(-m-1))/(q;q)oo^2, m = 0..6",
            kind="series",
            grid_default=6,
            lhs_ops=frozenset(
                {"bivar.euler_inv_pochhammer", "bivar.coeff_x"}
            ),
            rhs_ops=frozenset({"qseries.false_theta"}),
            lhs=_coeffx_lhs,
            rhs=_coeffx_rhs,
        ),
        Identity(
            id="dec-sl2",
            description="sl(2) parafermion character decomposes into diagonal "
            "W(2,3) module characters",
            statement="(Phi_0 - Phi_-1)/(q;q)oo^2 = sum_{m>=0} "
            "q^(2m(m+1)) (1-q^(m+1))^2 (1-q^(2m+2)) / (q;q)oo^2",
            kind="series",
            grid_default=None,
            lhs_ops=frozenset(
                {"characters.ch_para_sl2_theta", "qseries.false_theta"}
            ),
            rhs_ops=frozenset({"characters.ch_para_sl2_w23sum"}),
            lhs=_single("ch_para_sl2_theta"),
            rhs=_single("ch_para_sl2_w23sum"),
        ),
        Identity(
            id="affine-ct",
            description="constant terms of affine sl(2) characters are the "
            "parafermion module characters",
            statement="CT_x (x^-s+...+x^s) q^(2s(s+1))/((xq;q)oo (x^-1 q;q)oo) "
            "= q^(2s(s+1)) (Phi_0 + Phi_-1 - 2 Phi_(-s-1))/(q;q)oo^2, s = 0..4",
            kind="series",
            grid_default=4,
            lhs_ops=frozenset(
                {
                    "bivar.affine_sl2_char",
                    "bivar.euler_inv_pochhammer",
                    "bivar.sl2_weight_poly",
                    "bivar.constant_term",
                }
            ),
            rhs_ops=frozenset(
                {"characters.ch_para_sl2_mod_theta", "qseries.false_theta"}
            ),
            lhs=_affine_ct_lhs,
            rhs=_s_family("ch_para_sl2_mod_theta"),
        ),
        Identity(
            id="hw-consistency",
            description="general-p highest weights specialize at p = 2 to the "
            "closed forms",
            statement="h^(p)_(m,n), beta^(p)_(m,n) at p = 2 equal the closed "
            "p = 2 forms, exact rationals, m,n <= 20",
            kind="grid",
            grid_default=20,
            lhs_ops=frozenset({"characters.highest_weight"}),
            rhs_ops=frozenset({"characters.highest_weight_p2"}),
            lhs=_hw_lhs,
            rhs=_hw_rhs,
        ),
        Identity(
            id="weight0-mult",
            description="zero-weight multiplicity of V(m, n) from the full "
            "Weyl character table equals min(m+1, n+1)",
            statement="dim V_sl3(m w1 + n w2)_0 = min(m+1, n+1) on the "
            "root-lattice grid m,n <= 10",
            kind="grid",
            grid_default=10,
            lhs_ops=frozenset(
                {"lie_a2.weight_zero_mult", "lie_a2.weyl_character"}
            ),
            rhs_ops=frozenset(),
            lhs=_weight0_lhs,
            rhs=_weight0_rhs,
        ),
        Identity(
            id="gl2-inv",
            description="gl(2)-invariant dimension of V(m, n) by brute-force "
            "string counting equals delta_(m,n)",
            statement="dim V_sl3(m w1 + n w2)^gl(2) = delta_(m,n), m,n <= 8",
            kind="grid",
            grid_default=8,
            lhs_ops=frozenset(
                {"lie_a2.gl2_invariant_dim", "lie_a2.weyl_character"}
            ),
            rhs_ops=frozenset(),
            lhs=_gl2_lhs,
            rhs=_gl2_rhs,
        ),
    ]
