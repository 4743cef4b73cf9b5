import numpy as np
import pytest

from varregion import (
    BoundaryCurve,
    ConstantInner,
    ConstrainedSchwarz,
    EvalPoint,
    JanowskiParams,
    boundary_curve,
    check_convexity_and_jordan,
    check_corollary0,
    check_coverage,
    check_halfplane_univalence,
    check_prop1,
    check_rotation,
    check_strict_inclusion,
    check_unit_lambda,
    member_log_fprime,
    run_suite,
    run_suites,
    singleton_value,
    variability_disk,
)
from varregion.verify import SUITE_NAMES, run_convexity_default, run_inclusion_default

P05 = JanowskiParams(0.0, 0.5)
LOG_1_25 = 0.22314355131420976
SMALL_SETS = (P05, JanowskiParams(-0.9, -0.1))


def test_prop1_passes():
    r = check_prop1(param_sets=SMALL_SETS, n_samples=24, seed=1)
    assert r.passed and r.witnesses == []
    assert r.max_violation <= r.tolerance


def test_prop1_extremal_equality_case():
    # constant unimodular members sit on the circle: distance - r is ~0
    point = EvalPoint(0.5, 0.5)
    disk = variability_disk(point, P05)
    for th in np.linspace(-np.pi, np.pi, 16, endpoint=False):
        s = ConstrainedSchwarz(ConstantInner(np.exp(1j * th)), 0.5)
        w = member_log_fprime(s, P05, 0.5)
        pullback = np.exp(w / P05.exponent)
        assert abs(abs(pullback - disk.center) - disk.radius) < 1e-12


def test_corollary0_passes_and_is_sharp():
    r = check_corollary0(param_sets=SMALL_SETS, n_samples=24, seed=1)
    assert r.passed and r.witnesses == []
    # direct sharpness: psi == 1 at real z gives |1 + Bz^2 - 1| = |B| z^2
    s = ConstrainedSchwarz(ConstantInner(1.0), 0.0)
    for z in (0.3, 0.7):
        w = member_log_fprime(s, P05, z)
        assert abs(np.exp(w / P05.exponent) - 1.0) == pytest.approx(
            abs(P05.B) * z * z, abs=1e-15
        )


def test_unit_lambda_suite():
    r = check_unit_lambda(param_sets=SMALL_SETS)
    assert r.passed and r.witnesses == []
    assert singleton_value(EvalPoint(0.5, 1.0), P05) == pytest.approx(-LOG_1_25, abs=1e-15)
    assert singleton_value(EvalPoint(0.0, 1.0), P05) == 0.0
    radii = [variability_disk(EvalPoint(0.5, 1 - 2.0**-k), P05).radius for k in range(1, 12)]
    assert all(b < a for a, b in zip(radii, radii[1:]))


def test_rotation_suite_zero_mismatches():
    r = check_rotation(param_sets=SMALL_SETS, n_rotations=8, n_samples=40, seed=2)
    assert r.passed
    assert r.max_violation == 0.0


def test_coverage_matches_to_roundoff():
    r = check_coverage(EvalPoint(0.5, 0.5), P05, grid_n=64)
    assert r.passed
    assert r.max_violation < 1e-8
    assert r.extra["hausdorff_member_to_region"] < 1e-10
    assert r.extra["hausdorff_region_to_member"] < 1e-10


def test_convexity_on_computed_curves():
    curve = boundary_curve(EvalPoint(0.5, 0.5), P05, 128)
    r = check_convexity_and_jordan(curve)
    assert r.passed and r.witnesses == []


def test_convexity_rejects_small_and_degenerate_curves():
    curve = boundary_curve(EvalPoint(0.5, 0.5), P05, 8)
    with pytest.raises(ValueError, match="at least 16"):
        check_convexity_and_jordan(curve)
    thetas = np.linspace(-np.pi, np.pi, 32)
    flat = BoundaryCurve(thetas, np.full(32, 0.25 + 0.25j))
    with pytest.raises(ValueError, match="degenerate"):
        check_convexity_and_jordan(flat)


def test_convexity_flags_nonconvex_curve():
    thetas = np.linspace(-np.pi, np.pi, 24, endpoint=False)
    radii = 1.0 + 0.5 * np.cos(5 * thetas)  # five-petal star: wildly nonconvex
    star = BoundaryCurve(thetas, radii * np.exp(1j * thetas))
    r = check_convexity_and_jordan(star)
    assert not r.passed
    assert r.max_violation > r.tolerance
    assert r.witnesses


def test_jordan_flags_self_intersection():
    thetas = np.linspace(-np.pi, np.pi, 24, endpoint=False)
    values = np.exp(2j * thetas)  # winds twice: plenty of proper crossings
    curve = BoundaryCurve(thetas, values + 0.001j * thetas)
    r = check_convexity_and_jordan(curve)
    assert not r.passed


def test_strict_inclusion_witness():
    r = check_strict_inclusion(P05)
    assert r.passed
    assert r.extra["distance_outside"] > 0.3
    assert 0.9 <= r.extra["witness_z"] < 1.0
    with pytest.raises(ValueError, match="B < 1"):
        check_strict_inclusion(JanowskiParams(-1.0, 1.0))


def test_inclusion_default_covers_all_disk_pairs():
    r = run_inclusion_default()
    assert r.passed
    assert r.parameter_sets == 4  # (A, B) = (-1, 1) is the excluded half-plane case
    assert all(d["distance_outside"] > 0 for d in r.extra["witnesses_found"])


def test_halfplane_suite():
    r = check_halfplane_univalence(n_samples=24, seed=3)
    assert r.passed
    assert r.extra["min_re_fprime"]["B=0.5"] > 2.0 / 3.0 - 1e-9
    assert r.extra["min_re_fprime"]["B=1.0"] > 0.5 - 1e-9


def test_convexity_default_sweep():
    r = run_convexity_default(param_sets=SMALL_SETS, n=64)
    assert r.passed


def test_reports_deterministic():
    a = check_prop1(param_sets=(P05,), n_samples=16, seed=9).to_dict()
    b = check_prop1(param_sets=(P05,), n_samples=16, seed=9).to_dict()
    assert a == b


def test_all_suites_pass_and_have_consistent_fields():
    reports = run_suites(SUITE_NAMES, seed=0)
    for r in reports:
        assert r.passed == (r.max_violation <= r.tolerance)
        if r.passed:
            assert r.witnesses == []
        assert r.samples > 0
    assert [r.suite_name for r in reports] == list(SUITE_NAMES)


def test_run_suite_unknown_name():
    with pytest.raises(KeyError, match="unknown suite"):
        run_suite("bogus")
