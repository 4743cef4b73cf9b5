import numpy as np
import pytest
from hypothesis import given, strategies as st

from varregion import (
    BoundaryCurve,
    Disk,
    EvalPoint,
    JanowskiParams,
    Verdict,
    boundary_curve,
    boundary_point,
    contains,
    equivalent_disk_param,
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
from varregion.verify import DEFAULT_PARAM_SETS

# frozen oracle values (high-precision logs, correctly rounded to binary64)
LOG_1_2 = 0.18232155679395462
LOG_1_1 = 0.09531017980432487
LOG_1_125 = 0.11778303565638346
LOG_1_25 = 0.22314355131420976

P05 = JanowskiParams(0.0, 0.5)
PT = EvalPoint(0.5, 0.5)

POINT_GRID = [
    (0.5, 0.5),
    (0.3 + 0.4j, 0.3),
    (-0.7, 0.9),
    (0.1j, 0.0),
]


def _disks(lo=0.0, hi=0.95):
    return st.complex_numbers(max_magnitude=hi, allow_nan=False, allow_infinity=False).filter(
        lambda z: lo <= abs(z) <= hi
    )


# ---------------------------------------------------------------------------
# domain types


def test_params_validation():
    with pytest.raises(ValueError, match="B != 0"):
        JanowskiParams(-0.5, 0.0)
    with pytest.raises(ValueError):
        JanowskiParams(0.5, 0.3)  # classical ordering B < A is out of scope
    with pytest.raises(ValueError):
        JanowskiParams(0.5, 0.5)
    with pytest.raises(ValueError):
        JanowskiParams(-1.5, 0.5)
    with pytest.raises(ValueError):
        JanowskiParams(0.0, 1.5)
    assert JanowskiParams(-1.0, 1.0).exponent == -2.0
    assert JanowskiParams(0.0, 0.5).exponent == -1.0


def test_eval_point_validation():
    with pytest.raises(ValueError, match=r"\|z0\| < 1"):
        EvalPoint(1.0, 0.5)
    with pytest.raises(ValueError, match=r"\|lambda\| <= 1"):
        EvalPoint(0.5, 1.5)
    assert EvalPoint(0.5, 1.0).lam == 1.0  # |lambda| = 1 is legal (singleton)


def test_disk_type():
    with pytest.raises(ValueError):
        Disk(0.0, -1.0)
    d = Disk(1.0, 0.5)
    assert d.signed_distance(1.5) == pytest.approx(0.0, abs=1e-15)
    assert d.contains_point(1.2)
    assert not d.contains_point(2.0)


def test_boundary_curve_invariants():
    with pytest.raises(ValueError, match="strictly increasing"):
        BoundaryCurve(np.array([0.0, 0.0, 1.0]), np.zeros(3, complex))
    with pytest.raises(ValueError, match="finite"):
        BoundaryCurve(np.array([0.0, 1.0]), np.array([0.0, np.nan + 0j]))
    with pytest.raises(ValueError):
        BoundaryCurve(np.array([0.0, 1.0]), np.zeros(3, complex))


# ---------------------------------------------------------------------------
# mobius automorphisms


def test_mobius_examples():
    lam = 0.3 + 0.2j
    assert mobius_delta(0.0, lam) == pytest.approx(lam, abs=1e-16)
    assert mobius_delta(0.4 - 0.1j, 0.0) == pytest.approx(0.4 - 0.1j, abs=1e-16)
    assert mobius_delta(0.5, 0.5) == pytest.approx(0.8, abs=1e-15)


def test_mobius_domain_errors():
    with pytest.raises(ValueError, match=r"\|lambda\| < 1"):
        mobius_delta(0.5, 1.0)
    with pytest.raises(ValueError):
        mobius_delta_inv(0.5, 1.2)
    with pytest.raises(ValueError, match="vanished"):
        mobius_delta_inv(2.0, 0.5)  # 1 - 0.5*2 = 0


def test_mobius_inv_examples():
    assert mobius_delta_inv(0.5, 0.5) == pytest.approx(0.0, abs=1e-16)
    assert mobius_delta_inv(0.8, 0.5) == pytest.approx(0.5, abs=1e-15)
    assert mobius_delta_inv(0.0, 0.5) == pytest.approx(-0.5, abs=1e-16)


@given(z=_disks(hi=1.0), lam=_disks(hi=0.95))
def test_mobius_roundtrip_property(z, lam):
    assert abs(mobius_delta_inv(mobius_delta(z, lam), lam) - z) < 1e-12


def test_mobius_roundtrip_bulk():
    rng = np.random.default_rng(0)
    z = rng.uniform(-1, 1, 10_000) + 1j * rng.uniform(-1, 1, 10_000)
    z = z[np.abs(z) <= 1.0]
    lam = 0.95 * np.sqrt(rng.uniform(0, 1)) * np.exp(1j * rng.uniform(-np.pi, np.pi))
    err = np.abs(mobius_delta_inv(mobius_delta(z, lam), lam) - z)
    assert float(err.max()) < 1e-12


def test_schwarz_pick_contraction():
    lam = 0.4 - 0.3j
    circle = np.exp(1j * np.linspace(-np.pi, np.pi, 512, endpoint=False))
    assert float(np.max(np.abs(np.abs(mobius_delta(circle, lam)) - 1.0))) < 1e-12
    interior = 0.9 * circle
    assert float(np.max(np.abs(mobius_delta(interior, lam)))) < 1.0


# ---------------------------------------------------------------------------
# subordination target and majorant


def test_phi_examples():
    assert phi_target(0.0, P05) == 0.0
    assert phi_target(0.5, P05) == pytest.approx(-0.2, abs=1e-16)


@pytest.mark.parametrize("params", DEFAULT_PARAM_SETS)
def test_majorant_differential_identity(params):
    # z q'/q must reproduce the subordination target; q' by central differences
    h = 1e-6
    rng = np.random.default_rng(3)
    z = 0.9 * np.sqrt(rng.uniform(0, 1, 200)) * np.exp(1j * rng.uniform(-np.pi, np.pi, 200))
    q = majorant_q(z, params.A, params.B)
    dq = (majorant_q(z + h, params.A, params.B) - majorant_q(z - h, params.A, params.B)) / (2 * h)
    err = np.abs(z * dq / q - phi_target(z, params))
    assert float(err.max()) < 1e-6


def test_majorant_examples():
    assert majorant_q(0.0, -0.5, 0.5) == pytest.approx(1.0, abs=1e-16)
    assert majorant_q(0.5, 0.0, 0.5) == pytest.approx(0.8, abs=1e-15)
    z = np.array([0.1, -0.3 + 0.2j, 0.5j])
    np.testing.assert_allclose(majorant_q(z, -0.7, 0.0), np.exp(-0.7 * z), atol=1e-16)
    with pytest.raises(ValueError):
        majorant_q(0.3, 0.5, 0.5)
    with pytest.raises(ValueError):
        majorant_q(0.3, 0.5, 0.0)  # B = 0 still needs A < B


# ---------------------------------------------------------------------------
# the variability disk and its parametrizations


def test_variability_disk_examples():
    d = variability_disk(EvalPoint(0.0, 0.3), P05)
    assert d.center == 1.0 and d.radius == 0.0
    d = variability_disk(PT, P05)
    assert abs(d.center - 1.1) < 1e-12 and abs(d.radius - 0.1) < 1e-12


def test_variability_disk_lambda0_exact():
    for z0, _ in POINT_GRID:
        for params in DEFAULT_PARAM_SETS:
            d = variability_disk(EvalPoint(z0, 0.0), params)
            assert d.center == 1.0
            assert d.radius == abs(params.B) * abs(z0) ** 2


def test_variability_disk_domain():
    for lam in (1.0, -0.1, 0.5 + 0.1j):
        with pytest.raises(ValueError, match="real in"):
            variability_disk(EvalPoint(0.5, lam), P05)


def test_radius_monotone_vanishing():
    radii = [
        variability_disk(EvalPoint(0.5, 1.0 - 2.0**-k), P05).radius for k in range(1, 41)
    ]
    assert all(b < a for a, b in zip(radii, radii[1:]))
    assert radii[-1] < 1e-11


def test_region_point_examples():
    d = variability_disk(PT, P05)
    a_unit = (1.0 - d.center) / d.radius
    assert abs(a_unit) <= 1.0 + 1e-12
    assert abs(region_point(a_unit, PT, P05)) < 1e-14
    assert region_point(1.0, PT, P05) == pytest.approx(-LOG_1_2, abs=1e-14)
    assert region_point(0.0, PT, P05) == pytest.approx(-LOG_1_1, abs=1e-14)
    with pytest.raises(ValueError, match=r"\|a\| <= 1"):
        region_point(1.5, PT, P05)


def test_positive_real_part_of_disk():
    # guarantees the principal log never meets the branch cut
    a = np.exp(1j * np.linspace(-np.pi, np.pi, 64)) * np.array([[0.0], [0.5], [1.0]])
    for z0, lam in POINT_GRID:
        for params in DEFAULT_PARAM_SETS:
            d = variability_disk(EvalPoint(z0, lam), params)
            assert float(np.min((d.center + a * d.radius).real)) > 0.0


def test_boundary_point_examples():
    assert boundary_point(0.0, PT, P05) == pytest.approx(-LOG_1_2, abs=1e-14)
    assert abs(boundary_point(np.pi, PT, P05)) < 1e-15


@pytest.mark.parametrize("params", DEFAULT_PARAM_SETS)
@pytest.mark.parametrize("z0,lam", POINT_GRID)
def test_boundary_matches_region_parametrization(params, z0, lam):
    point = EvalPoint(z0, lam)
    th = np.linspace(-np.pi, np.pi, 256, endpoint=False)
    a = equivalent_disk_param(np.exp(1j * th), point, params)
    err = np.abs(boundary_point(th, point, params) - region_point(a, point, params))
    assert float(err.max()) < 1e-12


def test_equivalent_disk_param_modulus():
    point = EvalPoint(0.3 + 0.4j, 0.5)
    params = JanowskiParams(-0.9, -0.1)
    k = np.exp(1j * np.linspace(-np.pi, np.pi, 128))
    a = equivalent_disk_param(k, point, params)
    assert float(np.max(np.abs(np.abs(a) - 1.0))) < 1e-12
    inner = equivalent_disk_param(0.5 * k, point, params)
    assert float(np.max(np.abs(inner))) < 1.0
    with pytest.raises(ValueError):
        equivalent_disk_param(1.0, EvalPoint(0.0, 0.5), params)


def test_boundary_curve_examples():
    with pytest.raises(ValueError, match="n >= 3"):
        boundary_curve(PT, P05, 2)
    with pytest.raises(ValueError, match="singleton"):
        boundary_curve(EvalPoint(0.0, 0.5), P05)
    curve = boundary_curve(PT, P05, 4)
    np.testing.assert_allclose(curve.thetas, [-np.pi / 2, 0.0, np.pi / 2, np.pi])
    assert curve.values[-1] == 0.0  # theta = pi lands exactly on log 1 = 0
    assert curve.values[1] == pytest.approx(-LOG_1_2, abs=1e-14)
    for _, v in curve.samples:
        assert contains(v, PT, P05).status is Verdict.BOUNDARY


def test_boundary_curve_lambda0_is_log_circle():
    # at lambda = 0 the pre-log image is the circle |u - 1| = |B||z0|^2
    curve = boundary_curve(EvalPoint(0.5, 0.0), P05, 128)
    u = np.exp(curve.values / P05.exponent)
    assert float(np.max(np.abs(np.abs(u - 1.0) - 0.125))) < 1e-15


# ---------------------------------------------------------------------------
# membership


def test_contains_examples():
    v = contains(-LOG_1_2, PT, P05)
    assert v.status is Verdict.BOUNDARY and abs(v.slack) < 1e-12
    v = contains(0.0, PT, P05)
    assert v.status is Verdict.BOUNDARY
    v = contains(-LOG_1_125, PT, P05)
    assert v.status is Verdict.INTERIOR and v.slack == pytest.approx(-0.5, abs=1e-12)


def test_contains_domain_errors():
    with pytest.raises(ValueError, match="singleton"):
        contains(0.0, EvalPoint(0.0, 0.5), P05)
    with pytest.raises(ValueError, match=r"\|lambda\| < 1"):
        contains(0.0, EvalPoint(0.5, 1.0), P05)
    with pytest.raises(ValueError, match="tol"):
        contains(0.0, PT, P05, tol=0.0)


@pytest.mark.parametrize("params", DEFAULT_PARAM_SETS)
@pytest.mark.parametrize("z0,lam", POINT_GRID)
def test_membership_consistency(params, z0, lam):
    point = EvalPoint(z0, lam)
    for th in np.linspace(-np.pi, np.pi, 16, endpoint=False):
        w = boundary_point(th, point, params)
        assert contains(w, point, params).status is Verdict.BOUNDARY
    for rho in (0.0, 0.5, 1.0 - 1e-6):
        for phi in (0.0, 2.0, -1.3):
            w = region_point(rho * np.exp(1j * phi), point, params)
            assert contains(w, point, params).status is Verdict.INTERIOR
    d = variability_disk(point, params)
    if d.radius > 0:
        w = params.exponent * np.log(d.center + 1.5 * d.radius)
        assert contains(w, point, params).status is Verdict.OUTSIDE


def test_rotation_equivariance_of_verdicts():
    params = JanowskiParams(-0.5, 0.5)
    z0, lam = 0.4 - 0.2j, 0.45
    for th in np.linspace(0, 2 * np.pi, 8, endpoint=False):
        rot = np.exp(1j * th)
        frame1 = EvalPoint(rot * z0, lam)
        frame2 = EvalPoint(z0, lam * rot)
        d = variability_disk(frame1, params)
        probes = [
            boundary_point(0.7, frame1, params),
            region_point(0.25, frame1, params),
            params.exponent * np.log(d.center + 1.4 * d.radius),
        ]
        expected = [Verdict.BOUNDARY, Verdict.INTERIOR, Verdict.OUTSIDE]
        for w, want in zip(probes, expected):
            v1 = contains(w, frame1, params)
            v2 = contains(w, frame2, params)
            assert v1.status is v2.status is want


def test_pullback_modulus_vectorized():
    ws = np.array([boundary_point(t, PT, P05) for t in (-1.0, 0.0, 2.0)])
    m = pullback_modulus(ws, PT, P05)
    np.testing.assert_allclose(m, 0.5, atol=1e-12)


# ---------------------------------------------------------------------------
# auxiliary disks and singletons


def test_janowski_disk():
    d = janowski_disk(P05)
    assert d.center == pytest.approx(4.0 / 3.0, abs=1e-15)
    assert d.radius == pytest.approx(2.0 / 3.0, abs=1e-15)
    for params in DEFAULT_PARAM_SETS:
        if params.B >= 1.0:
            with pytest.raises(ValueError, match="half plane"):
                janowski_disk(params)
            continue
        d = janowski_disk(params)
        left = (1.0 + params.A) / (1.0 + params.B)
        right = (1.0 - params.A) / (1.0 - params.B)
        assert d.center - d.radius == pytest.approx(left, abs=1e-12)
        assert d.center + d.radius == pytest.approx(right, abs=1e-12)


def test_singleton_value():
    assert singleton_value(EvalPoint(0.5, 1.0), P05) == pytest.approx(-LOG_1_25, abs=1e-15)
    assert singleton_value(EvalPoint(0.0, 0.3), P05) == 0.0
    with pytest.raises(ValueError, match=r"\|lambda\| = 1"):
        singleton_value(EvalPoint(0.5, 0.5), P05)
