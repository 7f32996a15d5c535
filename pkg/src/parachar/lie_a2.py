"""Finite Lie theory for A_2: bilinear form, Weyl group, characters.

Weights are stored in fundamental-weight coordinates throughout: a pair
(m, n) means m*w1 + n*w2.  The simple roots in these coordinates are
a1 = (2, -1) and a2 = (-1, 2), and the Weyl vector is rho = (1, 1).  The
invariant form is normalized so that (a_i, a_i) = 2, giving the Gram matrix
((2/3, 1/3), (1/3, 2/3)) on fundamental weights; in particular the pairing
of any weight with rho is just the sum of its coordinates.

Characters are computed by the Weyl character formula as an exact quotient
of alternating Laurent-polynomial sums; exactness of that division is a
built-in consistency check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

ALPHA1 = (2, -1)
ALPHA2 = (-1, 2)
RHO = (1, 1)

_GRAM = (
    (Fraction(2, 3), Fraction(1, 3)),
    (Fraction(1, 3), Fraction(2, 3)),
)


class WeylDivisionError(RuntimeError):
    """The alternating-sum quotient failed to divide exactly (must not occur)."""


class Weight(NamedTuple):
    m: int
    n: int


def in_root_lattice(weight) -> bool:
    """A dominant weight m*w1 + n*w2 lies in the root lattice iff m = n mod 3."""
    m, n = weight
    return (m - n) % 3 == 0


def pairing(lam, mu) -> Fraction:
    """Invariant bilinear form on weight space, exact rational value.

    Accepts arbitrary (possibly non-dominant, non-integral) coordinate pairs.
    """
    a, b = lam
    c, d = mu
    return (
        _GRAM[0][0] * a * c
        + _GRAM[0][1] * (a * d + b * c)
        + _GRAM[1][1] * b * d
    )


class WeylElement(NamedTuple):
    """One Weyl group element: integer matrix on fundamental-weight coordinates."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    length: int

    def apply(self, weight) -> tuple[int, int]:
        a, b = weight
        (p, q), (r, s) = self.matrix
        return (p * a + q * b, r * a + s * b)

    @property
    def sign(self) -> int:
        return -1 if self.length & 1 else 1


_W = (
    WeylElement(((1, 0), (0, 1)), 0),    # identity
    WeylElement(((-1, 0), (1, 1)), 1),   # s1: (a,b) -> (-a, a+b)
    WeylElement(((1, 1), (0, -1)), 1),   # s2: (a,b) -> (a+b, -b)
    WeylElement(((-1, -1), (1, 0)), 2),  # s1 s2
    WeylElement(((0, 1), (-1, -1)), 2),  # s2 s1
    WeylElement(((0, -1), (-1, 0)), 3),  # longest element: (a,b) -> (-b,-a)
)


def weyl_group() -> tuple[WeylElement, ...]:
    """All six Weyl group elements of A_2, identity first."""
    return _W


def _alternating_orbit(weight) -> dict[tuple[int, int], int]:
    """sum_w sign(w) e^(w(weight)) as a sparse Laurent polynomial on the lattice."""
    out: dict[tuple[int, int], int] = {}
    for w in _W:
        k = w.apply(weight)
        out[k] = out.get(k, 0) + w.sign
    return {k: v for k, v in out.items() if v}


def _divide_exact(num: dict, den: dict, max_steps: int) -> dict:
    # Leading-term elimination under lex order on (a, b).  The denominator's
    # lex-leading coefficient is a unit (+-1), so each step cancels the
    # remainder's leading term outright and the leading monomial strictly
    # decreases; supports stay inside a fixed box, so this terminates.
    lead_den = max(den)
    cd = den[lead_den]
    rem = dict(num)
    quot: dict[tuple[int, int], int] = {}
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise WeylDivisionError("alternating-sum division did not terminate")
        lead = max(rem)
        c, r = divmod(rem[lead], cd)
        if r:
            raise WeylDivisionError("alternating-sum division is not exact")
        shift = (lead[0] - lead_den[0], lead[1] - lead_den[1])
        quot[shift] = quot.get(shift, 0) + c
        for k, v in den.items():
            kk = (k[0] + shift[0], k[1] + shift[1])
            nv = rem.get(kk, 0) - c * v
            if nv:
                rem[kk] = nv
            else:
                rem.pop(kk, None)
    return quot


@lru_cache(maxsize=None)
def _character_table(m: int, n: int) -> dict[tuple[int, int], int]:
    num = _alternating_orbit((m + 1, n + 1))
    den = _alternating_orbit(RHO)
    table = _divide_exact(num, den, max_steps=20 * dim((m, n)) + 100)
    if any(v <= 0 for v in table.values()):
        raise WeylDivisionError("character has a non-positive multiplicity")
    return table


def weyl_character(weight) -> dict[tuple[int, int], int]:
    """Full weight-multiplicity table of the irreducible sl(3)-module V(m, n)."""
    m, n = weight
    if m < 0 or n < 0:
        raise ValueError("weyl_character requires a dominant weight")
    return dict(_character_table(m, n))


def dim(weight) -> int:
    """Weyl dimension formula for A_2: (m+1)(n+1)(m+n+2)/2."""
    m, n = weight
    if m < 0 or n < 0:
        raise ValueError("dim requires a dominant weight")
    return (m + 1) * (n + 1) * (m + n + 2) // 2


def weight_zero_mult(weight) -> int:
    """Multiplicity of the zero weight in V(m, n).

    Zero is a weight of V(m, n) only for root-lattice highest weights; for
    the others the zero-weight space is empty and the count is 0.
    """
    if not in_root_lattice(weight):
        return 0
    return weyl_character(weight).get((0, 0), 0)


def gl2_invariant_dim(weight) -> int:
    """Dimension of the gl(2)-invariant subspace of V(m, n).

    gl(2) sits inside sl(3) as the sl(2) along a1 plus the center spanned by
    h1 + 2*h2 (the line orthogonal to a1).  A weight (a, b) has central
    charge a + 2b and a1-string weight a, so the invariants are counted by
    restricting to a + 2b = 0 and subtracting string contributions:
    mult(a = 0) - mult(a = 2) inside that subspace.
    """
    table = weyl_character(weight)
    by_string_weight: dict[int, int] = {}
    for (a, b), mult in table.items():
        if a + 2 * b == 0:
            by_string_weight[a] = by_string_weight.get(a, 0) + mult
    return by_string_weight.get(0, 0) - by_string_weight.get(2, 0)
