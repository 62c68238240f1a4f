"""Exact orthogonal polynomials from q-moment sequences.

Everything is computed over the field Q(q) of rational functions with
rational coefficients; no floating point is involved anywhere.  The
package builds monic orthogonal polynomial sequences from moment
sequences by three independent routes (determinants, the three-term
recurrence, and per-family closed formulas) and cross-checks them.
"""

from .exactalg import (
    PoleError,
    QPolynomial,
    QRational,
    RationalNumber,
    qpoly_arith,
    qrat_eval_at,
    qrat_normalize,
    rational_from_str,
    rational_to_str,
)
from .qcombinatorics import (
    q_binomial,
    q_bracket,
    q_double_factorial,
    q_factorial,
    q_multifactorial,
    q_pochhammer_signed,
    q_power_binom2,
)
from .xpoly import (
    MomentSequence,
    XPolynomial,
    apply_functional,
    even_part_compress,
    xpoly_arith,
)
from .momentfamilies import (
    DEFAULT_DEPTH_CAP,
    HARD_DEPTH_CAP,
    FamilyId,
    MomentFamily,
    aerated_moment,
    closed_T,
    closed_st,
    family,
    family_moment,
    functional_from_basis,
    registry_family_ids,
)
from .orthocore import (
    ExpansionTriangle,
    QuasiDefinitenessError,
    RecurrenceTable,
    aerated_orthopoly,
    aerated_recurrence,
    deaerate,
    expansion_triangle,
    hankel_direct,
    hankel_product,
    orthopoly_det,
    orthopoly_recur,
    stieltjes,
)
from .closedforms import (
    VerificationEntry,
    VerificationReport,
    cf_chebT,
    cf_chebT_rescaled,
    cf_chebU,
    cf_chebU_rescaled,
    cf_geometric_norm,
    cf_geometric_poly,
    cf_multifactorial_poly,
    cf_qbinomial_product,
    cf_qbinomial_sum,
    cf_qfibonacci,
    cf_qhermite,
    cf_qlaguerre,
    cf_qlucas,
    classical_polynomial,
    closed_polynomial,
    specialize_poly,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "PoleError",
    "QPolynomial",
    "QRational",
    "RationalNumber",
    "qpoly_arith",
    "qrat_eval_at",
    "qrat_normalize",
    "rational_from_str",
    "rational_to_str",
    "q_binomial",
    "q_bracket",
    "q_double_factorial",
    "q_factorial",
    "q_multifactorial",
    "q_pochhammer_signed",
    "q_power_binom2",
    "MomentSequence",
    "XPolynomial",
    "apply_functional",
    "even_part_compress",
    "xpoly_arith",
    "DEFAULT_DEPTH_CAP",
    "HARD_DEPTH_CAP",
    "FamilyId",
    "MomentFamily",
    "aerated_moment",
    "closed_T",
    "closed_st",
    "family",
    "family_moment",
    "functional_from_basis",
    "registry_family_ids",
    "ExpansionTriangle",
    "QuasiDefinitenessError",
    "RecurrenceTable",
    "aerated_orthopoly",
    "aerated_recurrence",
    "deaerate",
    "expansion_triangle",
    "hankel_direct",
    "hankel_product",
    "orthopoly_det",
    "orthopoly_recur",
    "stieltjes",
    "VerificationEntry",
    "VerificationReport",
    "cf_chebT",
    "cf_chebT_rescaled",
    "cf_chebU",
    "cf_chebU_rescaled",
    "cf_geometric_norm",
    "cf_geometric_poly",
    "cf_multifactorial_poly",
    "cf_qbinomial_product",
    "cf_qbinomial_sum",
    "cf_qfibonacci",
    "cf_qhermite",
    "cf_qlaguerre",
    "cf_qlucas",
    "classical_polynomial",
    "closed_polynomial",
    "specialize_poly",
    "verify_family",
    "__version__",
]
