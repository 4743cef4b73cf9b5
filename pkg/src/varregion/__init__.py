"""Variability regions of log f' for disk-subordination function classes."""

from .extremal import (
    ConvergenceError,
    ExtremalSpec,
    QuadratureConfig,
    closed_form_a0,
    extremal_fprime,
    extremal_value,
    fprime_segment_integral,
)
from .region import (
    BoundaryCurve,
    Disk,
    EvalPoint,
    JanowskiParams,
    MembershipVerdict,
    Verdict,
    boundary_curve,
    boundary_point,
    contains,
    equivalent_disk_param,
    is_unit_modulus,
    janowski_disk,
    majorant_q,
    mobius_delta,
    mobius_delta_inv,
    phi_target,
    pullback_modulus,
    region_point,
    singleton_value,
    variability_disk,
)
from .sampler import (
    BlaschkeInner,
    ConstantInner,
    ConstrainedSchwarz,
    InnerFunction,
    MonomialInner,
    inner_eval,
    member_log_fprime,
    omega_eval,
    sample_inner,
    special_curvature,
)
from .verify import (
    DEFAULT_LAMBDAS,
    DEFAULT_PARAM_SETS,
    DEFAULT_Z0S,
    SUITE_NAMES,
    VerificationReport,
    check_convexity_and_jordan,
    check_corollary0,
    check_coverage,
    check_halfplane_univalence,
    check_prop1,
    check_rotation,
    check_strict_inclusion,
    check_unit_lambda,
    run_suite,
    run_suites,
)

__version__ = "0.1.0"
