"""Extremal maps attaining the region boundary, evaluated by contour quadrature.

For |a| <= 1 and |lambda| < 1 the map F_{a,lambda} is defined by integrating
(1 + B zeta delta(a zeta, lambda))^((A-B)/B) from 0 to z.  Its derivative is
available in closed form; the primitive is computed with composite
Gauss-Legendre quadrature along the straight segment (the integrand is
analytic on the disk, so the path does not matter).  The a = 0 case has an
elementary antiderivative used as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .region import JanowskiParams, mobius_delta

__all__ = [
    "ExtremalSpec",
    "QuadratureConfig",
    "ConvergenceError",
    "extremal_fprime",
    "extremal_value",
    "fprime_segment_integral",
    "closed_form_a0",
]


@dataclass(frozen=True)
class ExtremalSpec:
    """Boundary-family member: disk parameter a, coefficient parameter lambda."""

    a: complex
    lam: complex
    params: JanowskiParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "lam", complex(self.lam))
        if abs(self.a) > 1.0 + 1e-12:
            raise ValueError(f"require |a| <= 1, got |a| = {abs(self.a)}")
        if abs(self.lam) >= 1.0:
            raise ValueError(f"require |lambda| < 1, got |lambda| = {abs(self.lam)}")


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre settings.

    Panels double until two successive composite estimates differ by at most
    abs_tol; max_panels = 1 can therefore never confirm the tolerance.
    """

    nodes_per_panel: int = 16
    max_panels: int = 1024
    abs_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.nodes_per_panel < 2:
            raise ValueError("require nodes_per_panel >= 2")
        if self.max_panels < 1:
            raise ValueError("require max_panels >= 1")
        if not self.abs_tol > 0.0:
            raise ValueError("require abs_tol > 0")


class ConvergenceError(RuntimeError):
    """Quadrature failed to meet abs_tol within max_panels."""

    def __init__(self, message: str, estimate: complex, achieved: float):
        super().__init__(message)
        self.estimate = estimate
        self.achieved = achieved


def extremal_fprime(spec: ExtremalSpec, z):
    """F'_{a,lambda}(z) = (1 + B z delta(a z, lambda))^((A-B)/B), principal branch.

    Equals 1 at z = 0.  Accepts scalar or ndarray z with |z| < 1.
    """
    d = mobius_delta(spec.a * z, spec.lam)
    return np.exp(spec.params.exponent * np.log(1.0 + spec.params.B * z * d))


def _composite_estimate(spec, z_from, z_to, nodes, weights, panels):
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    half = (0.5 / panels)
    t = mid + half * nodes[None, :]
    zeta = z_from + t * (z_to - z_from)
    g = extremal_fprime(spec, zeta)
    return (z_to - z_from) * half * np.sum(weights[None, :] * g)


def fprime_segment_integral(
    spec: ExtremalSpec,
    z_from: complex,
    z_to: complex,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """Integral of F' along the straight segment [z_from, z_to] inside the disk."""
    cfg = cfg or QuadratureConfig()
    if abs(z_from) >= 1.0 or abs(z_to) >= 1.0:
        raise ValueError("segment endpoints must lie in the open unit disk")
    if z_from == z_to:
        return 0j
    nodes, weights = np.polynomial.legendre.leggauss(cfg.nodes_per_panel)
    panels = 1
    prev = None
    while True:
        est = _composite_estimate(spec, z_from, z_to, nodes, weights, panels)
        if prev is not None:
            achieved = abs(est - prev)
            if achieved <= cfg.abs_tol:
                return complex(est)
        if panels >= cfg.max_panels:
            achieved = float("inf") if prev is None else abs(est - prev)
            raise ConvergenceError(
                f"quadrature did not reach abs_tol={cfg.abs_tol} within "
                f"{cfg.max_panels} panels (achieved {achieved:.3e})",
                estimate=complex(est),
                achieved=float(achieved),
            )
        prev = est
        panels *= 2


def extremal_value(
    spec: ExtremalSpec,
    z: complex,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """F_{a,lambda}(z), by adaptive composite Gauss-Legendre from 0 to z."""
    if z == 0:
        return 0j
    return fprime_segment_integral(spec, 0j, complex(z), cfg)


def closed_form_a0(lam: complex, params: JanowskiParams, z: complex) -> complex:
    """Exact antiderivative for a = 0, where the integrand is (1 + B lam zeta)^((A-B)/B).

    ((1 + B lam z)^(A/B) - 1)/(lam A) for A != 0, Log(1 + B lam z)/(B lam) for
    A = 0.  lam = 0 is rejected: the integrand is then identically 1 and
    F(z) = z needs no oracle.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("lambda = 0 makes F(z) = z; no closed form needed")
    if abs(lam) >= 1.0:
        raise ValueError(f"require |lambda| < 1, got |lambda| = {abs(lam)}")
    blam = params.B * lam
    if params.A == 0.0:
        return complex(np.log(1.0 + blam * z) / blam)
    apow = np.exp((params.A / params.B) * np.log(1.0 + blam * z))
    return complex((apow - 1.0) / (lam * params.A))
