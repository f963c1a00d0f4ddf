"""Desk-scale machinery for thin prime sets of floor-power type, prime
exponential sums, singular series, circle-method arc dissections, and
representation counts N = p1 + p2 + p3**k, with exact-rational constraint
solving and empirical bound audits."""

from .errors import CapacityError, InfeasibleParameters, SeriesVanishesError
from .psprimes import (
    Gamma,
    PrimeSieve,
    PSWeight,
    is_prime,
    is_ps_member,
    kth_root_ceil,
    kth_root_floor,
    ps_count,
    ps_primes_up_to,
    ps_weight,
)
from .expsums import (
    Alpha,
    ComplexAccumulator,
    eval_S1,
    eval_S3,
    eval_T1,
    eval_T3,
    psi,
    psi_truncation_audit,
)
from .singular import (
    EulerProductEstimate,
    b_q,
    c_q,
    singular_series_hua,
    singular_series_vinogradov,
)
from .circle import (
    ArcDissection,
    RationalApprox,
    SumSpec,
    circle_integral,
    classify,
    dirichlet_approx,
    major_measure,
)
from .counting import AsymptoticRow, RepQuery, count_all_ps, count_hua, main_term
from .bounds import (
    BoundAuditReport,
    ExponentTable,
    ParamTuple,
    check_theorem_constraints,
    graham_kolesnik_optimize,
    heath_brown_identity_check,
    solve_gamma_threshold,
    spacing_count,
    type_I_exponents,
)

__version__ = "0.1.0"
