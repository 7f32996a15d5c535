"""parachar: exact q-series characters for parafermion cosets and W(2,3).

The package computes, with exact big-integer coefficients to any truncation
order, every character in the family: W(2,3) module characters at central
charge -10 (Weyl-sum and product forms), the level -3/2 parafermion coset
characters of sl(2) and sl(3) (constant-term, false-theta, telescoping and
q-hypergeometric forms), and the finite A_2 Lie theory (Weyl characters,
zero-weight and gl(2)-invariant multiplicities) behind their decomposition
multiplicities.  The verify module cross-checks all of it as a registry of
seventeen exact identities; the cli module exposes everything as a command
line tool.
"""

from .qseries import (
    EXPONENT_DENOMINATOR,
    NotInvertibleError,
    QSeries,
    QSeriesError,
    UnknownCoefficientError,
    false_theta,
    make_monomial,
    one,
    pochhammer_q,
    zero,
)
from .bivar import (
    BivarSeries,
    affine_sl2_char,
    euler_inv_pochhammer,
    sl2_weight_poly,
)
from .lie_a2 import (
    Weight,
    WeylElement,
    dim,
    gl2_invariant_dim,
    in_root_lattice,
    pairing,
    weight_zero_mult,
    weyl_character,
    weyl_group,
)
from .characters import (
    BracketCoefficients,
    HighestWeightData,
    central_charge_k,
    central_charge_p,
    ch_octuplet,
    ch_para_sl2_ct,
    ch_para_sl2_mod_ct,
    ch_para_sl2_mod_theta,
    ch_para_sl2_qhyp,
    ch_para_sl2_theta,
    ch_para_sl2_tripleprod,
    ch_para_sl2_w23sum,
    ch_para_sl3_branch,
    ch_para_sl3_minsum,
    ch_para_sl3_signed,
    ch_w23_product,
    ch_w23_weylsum,
    f_poly,
    g_s,
    highest_weight,
    highest_weight_p2,
    w23_bracket_coeffs,
)
from .verify import Identity, IdentityReport, Mismatch, registry, run_all, run_identity

__version__ = "0.1.0"
