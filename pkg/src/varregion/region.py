"""Closed-form machinery for the variability region of log f'(z0).

The function class studied here consists of analytic, locally univalent,
normalized maps of the unit disk whose log-derivative is subordinate to
(A/B - 1) log(1 + Bz) for real parameters -1 <= A < B <= 1, B != 0.  Once the
second Taylor coefficient is pinned to f''(0) = lambda (A - B), the attainable
values of log f'(z0) fill a closed convex region: the image of a closed disk
D(c, r) under w -> ((A - B)/B) Log w.

This module provides the disk automorphisms, the center/radius formulas for
real lambda in [0, 1), the boundary parametrization, and an exact membership
test valid for any complex |lambda| < 1 via the Schwarz-Pick pullback.

All powers and logarithms use the principal branch.  This is legitimate
throughout: every quantity passed to Log has the form 1 + B*z0*delta with
|B*z0*delta| <= |B||z0| < 1, hence positive real part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "JanowskiParams",
    "EvalPoint",
    "Disk",
    "BoundaryCurve",
    "Verdict",
    "MembershipVerdict",
    "mobius_delta",
    "mobius_delta_inv",
    "phi_target",
    "majorant_q",
    "variability_disk",
    "region_point",
    "boundary_point",
    "boundary_curve",
    "contains",
    "pullback_modulus",
    "janowski_disk",
    "singleton_value",
    "equivalent_disk_param",
    "is_unit_modulus",
]


@dataclass(frozen=True)
class JanowskiParams:
    """Real parameter pair with -1 <= A < B <= 1 and B != 0."""

    A: float
    B: float

    def __post_init__(self) -> None:
        if not (-1.0 <= self.A < self.B <= 1.0):
            raise ValueError(
                f"require -1 <= A < B <= 1, got A={self.A!r}, B={self.B!r}"
            )
        if self.B == 0.0:
            raise ValueError("require B != 0")

    @property
    def exponent(self) -> float:
        """(A - B)/B, the power applied to 1 + B*omega(z)."""
        return (self.A - self.B) / self.B


@dataclass(frozen=True)
class EvalPoint:
    """Evaluation data: disk point z0 plus the second-coefficient parameter."""

    z0: complex
    lam: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z0", complex(self.z0))
        object.__setattr__(self, "lam", complex(self.lam))
        if abs(self.z0) >= 1.0:
            raise ValueError(f"require |z0| < 1, got |z0| = {abs(self.z0)}")
        if abs(self.lam) > 1.0 + 1e-12:
            raise ValueError(f"require |lambda| <= 1, got |lambda| = {abs(self.lam)}")


@dataclass(frozen=True)
class Disk:
    """Closed disk {w : |w - center| <= radius}; radius 0 encodes a singleton."""

    center: complex
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius >= 0.0:
            raise ValueError(f"require radius >= 0, got {self.radius}")

    def signed_distance(self, w: complex) -> float:
        """Negative inside, zero on the circle, positive outside."""
        return abs(w - self.center) - self.radius

    def contains_point(self, w: complex, tol: float = 0.0) -> bool:
        return self.signed_distance(w) <= tol


@dataclass(frozen=True)
class BoundaryCurve:
    """Ordered samples (theta_k, log F'(z0)) of the region's Jordan boundary."""

    thetas: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        thetas = np.asarray(self.thetas, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if thetas.ndim != 1 or thetas.shape != values.shape:
            raise ValueError("thetas and values must be 1-d arrays of equal length")
        if thetas.size >= 2 and not np.all(np.diff(thetas) > 0.0):
            raise ValueError("thetas must be strictly increasing")
        if not (np.all(np.isfinite(thetas)) and np.all(np.isfinite(values))):
            raise ValueError("curve samples must be finite")
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.thetas.size)

    @property
    def samples(self) -> list[tuple[float, complex]]:
        return list(zip(self.thetas.tolist(), self.values.tolist()))

    def as_points(self) -> np.ndarray:
        """Curve values as an (n, 2) real array of (Re, Im) pairs."""
        return np.column_stack([self.values.real, self.values.imag])


class Verdict(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the membership test; slack = |pullback| - |z0|."""

    status: Verdict
    slack: float


def is_unit_modulus(w: complex, tol: float = 1e-12) -> bool:
    """True when |w| = 1 up to construction roundoff."""
    return abs(abs(w) - 1.0) <= tol


def mobius_delta(z, lam):
    """Disk automorphism (z + lam) / (1 + conj(lam) z) for |lam| < 1.

    Maps the closed unit disk into itself and the unit circle onto itself.
    Accepts scalar or ndarray z (|z| <= 1); lam must be a scalar.
    """
    if abs(lam) >= 1.0:
        raise ValueError(f"require |lambda| < 1, got |lambda| = {abs(lam)}")
    return (z + lam) / (1.0 + np.conjugate(lam) * z)


def mobius_delta_inv(s, lam):
    """Functional inverse of :func:`mobius_delta`: (s - lam) / (1 - conj(lam) s)."""
    if abs(lam) >= 1.0:
        raise ValueError(f"require |lambda| < 1, got |lambda| = {abs(lam)}")
    den = 1.0 - np.conjugate(lam) * s
    if np.any(np.abs(den) == 0.0):
        raise ValueError("mobius_delta_inv: denominator 1 - conj(lambda) s vanished")
    return (s - lam) / den


def phi_target(z, params: JanowskiParams):
    """The subordination target (A - B) z / (1 + B z) for the log-derivative."""
    return (params.A - params.B) * z / (1.0 + params.B * z)


def majorant_q(z, A: float, B: float):
    """The majorant (1 + Bz)^(A/B - 1), or exp(Az) in the degenerate B = 0 case.

    Principal branch; smooth on the open disk since Re(1 + Bz) > 0 there.
    Unlike the rest of the module, B = 0 is accepted here.
    """
    if not (-1.0 <= A < B <= 1.0):
        raise ValueError(f"require -1 <= A < B <= 1 (B = 0 allowed), got A={A}, B={B}")
    if B == 0.0:
        return np.exp(A * z)
    return np.exp((A / B - 1.0) * np.log(1.0 + B * z))


def _real_unit_interval_lambda(lam: complex) -> float:
    if complex(lam).imag != 0.0:
        raise ValueError(f"require lambda real in [0, 1), got {lam!r}")
    x = complex(lam).real
    if not (0.0 <= x < 1.0):
        raise ValueError(f"require lambda real in [0, 1), got {x!r}")
    return x


def variability_disk(point: EvalPoint, params: JanowskiParams) -> Disk:
    """Center and radius of the pre-log disk 1 + B z0 delta(z0 D, lambda).

    Valid for real lambda in [0, 1).  At lambda = 0 this reduces exactly to
    Disk(1, |B| |z0|^2).
    """
    lam = _real_unit_interval_lambda(point.lam)
    z0 = point.z0
    m2 = abs(z0) ** 2
    den = 1.0 - lam * lam * m2
    center = (1.0 - lam * lam * m2 + lam * params.B * (1.0 - m2) * z0) / den
    radius = abs(params.B) * (1.0 - lam * lam) * m2 / den
    return Disk(center=center, radius=radius)


def region_point(a, point: EvalPoint, params: JanowskiParams):
    """((A - B)/B) Log(c + a r) for |a| <= 1; the full region as a ranges over D."""
    if np.any(np.abs(a) > 1.0 + 1e-12):
        raise ValueError("require |a| <= 1")
    disk = variability_disk(point, params)
    return params.exponent * np.log(disk.center + a * disk.radius)


def boundary_point(theta, point: EvalPoint, params: JanowskiParams):
    """Boundary parametrization ((A - B)/B) Log(1 + B z0 delta(e^{i theta} z0, lambda))."""
    lam = _real_unit_interval_lambda(point.lam)
    z0 = point.z0
    d = mobius_delta(np.exp(1j * np.asarray(theta)) * z0, lam)
    return params.exponent * np.log(1.0 + params.B * z0 * d)


def _unit_circle_grid(n: int) -> np.ndarray:
    """Unit-circle nodes e^{i(-pi + 2 pi k/n)}, k = 1..n.

    Argument reduction happens on the rational turn count, so the four
    cardinal directions come out exact (e.g. theta = pi gives exactly -1).
    """
    k = np.arange(1, n + 1)
    t = k / n - 0.5
    q = np.round(4.0 * t)
    u = 2.0 * np.pi * (t - q / 4.0)
    c, s = np.cos(u), np.sin(u)
    qm = q.astype(int) % 4
    re = np.choose(qm, [c, -s, -c, s])
    im = np.choose(qm, [s, c, -s, -c])
    return re + 1j * im


def boundary_curve(point: EvalPoint, params: JanowskiParams, n: int = 256) -> BoundaryCurve:
    """Sample the boundary on the uniform grid theta_k = -pi + 2 pi k/n, k = 1..n."""
    if n < 3:
        raise ValueError(f"require n >= 3 samples, got {n}")
    lam = _real_unit_interval_lambda(point.lam)
    if point.z0 == 0:
        raise ValueError("z0 = 0: the region degenerates to the singleton {0}")
    k = np.arange(1, n + 1)
    thetas = np.pi * (2.0 * k / n - 1.0)
    d = mobius_delta(_unit_circle_grid(n) * point.z0, lam)
    values = params.exponent * np.log(1.0 + params.B * point.z0 * d)
    return BoundaryCurve(thetas=thetas, values=values)


def pullback_modulus(w, point: EvalPoint, params: JanowskiParams):
    """|delta^{-1}(omega(z0)/z0, lambda)| for the Schwarz function implied by w.

    w is a claimed value of log f'(z0); the class constraint omega(0) = 0,
    omega'(0) = lambda bounds this modulus by |z0| exactly (Schwarz-Pick),
    with equality precisely on the boundary of the region.  Valid for any
    complex |lambda| < 1; for real lambda it reduces to the classical
    two-point Schwarz inequality.
    """
    if point.z0 == 0:
        raise ValueError("z0 = 0: the region degenerates to the singleton {0}")
    if abs(point.lam) >= 1.0:
        raise ValueError("membership test requires |lambda| < 1")
    u = np.exp(np.asarray(w) / params.exponent)
    zeta = (u - 1.0) / (params.B * point.z0)
    return np.abs(mobius_delta_inv(zeta, point.lam))


def contains(
    w: complex,
    point: EvalPoint,
    params: JanowskiParams,
    tol: float = 1e-9,
) -> MembershipVerdict:
    """Exact membership test for w against the region at (z0, lambda).

    The region is closed, so ties within tol resolve to Boundary.
    """
    if not tol > 0.0:
        raise ValueError("require tol > 0")
    slack = float(pullback_modulus(complex(w), point, params) - abs(point.z0))
    if abs(slack) <= tol:
        status = Verdict.BOUNDARY
    elif slack < -tol:
        status = Verdict.INTERIOR
    else:
        status = Verdict.OUTSIDE
    return MembershipVerdict(status=status, slack=slack)


def janowski_disk(params: JanowskiParams) -> Disk:
    """Curvature disk with diameter [(1+A)/(1+B), (1-A)/(1-B)], for B < 1.

    B = 1 turns the disk into the right half plane and is rejected here.
    """
    if params.B >= 1.0:
        raise ValueError("B = 1 gives a half plane, not a disk")
    den = 1.0 - params.B * params.B
    return Disk(
        center=(1.0 - params.A * params.B) / den,
        radius=(params.B - params.A) / den,
    )


def singleton_value(point: EvalPoint, params: JanowskiParams) -> complex:
    """The single attainable value of log f'(z0) when |lambda| = 1 or z0 = 0.

    |lambda| = 1 forces omega(z) = lambda z, so the class collapses to one
    function and the region to ((A - B)/B) Log(1 + B lambda z0).
    """
    if point.z0 == 0:
        return 0j
    if not is_unit_modulus(point.lam):
        raise ValueError(f"singleton requires |lambda| = 1, got |lambda| = {abs(point.lam)}")
    return complex(params.exponent * np.log(1.0 + params.B * point.lam * point.z0))


def equivalent_disk_param(k, point: EvalPoint, params: JanowskiParams):
    """Disk parameter a(k) with region_point(a(k)) = ((A-B)/B) Log(1 + B z0 delta(z0 k, lam)).

    a(k) = sign(B) (z0^2/|z0|^2) delta(k, lam conj(z0)); the unimodular prefactor
    matters for complex z0 and negative B.  A disk automorphism of k, so |a| <= 1
    whenever |k| <= 1, with equality on the unit circle.
    """
    lam = _real_unit_interval_lambda(point.lam)
    z0 = point.z0
    if z0 == 0:
        raise ValueError("z0 = 0 has no boundary parametrization")
    u0 = (params.B / abs(params.B)) * z0 * z0 / (abs(z0) ** 2)
    return u0 * mobius_delta(k, lam * np.conjugate(z0))
