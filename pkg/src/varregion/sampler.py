"""Exact class members via bounded analytic self-maps of the disk.

Every member of the lambda-constrained class arises as
f'(z) = (1 + B z delta(z w(z), lambda))^((A-B)/B) for some analytic w with
sup |w| <= 1.  The samplers here emit only inner-function forms whose bound
is exact by construction (constants, rotated monomials, scaled finite
Blaschke products), so containment checks never fail from a sloppy sup-norm
estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .region import JanowskiParams, mobius_delta

__all__ = [
    "ConstantInner",
    "MonomialInner",
    "BlaschkeInner",
    "InnerFunction",
    "ConstrainedSchwarz",
    "sample_inner",
    "inner_eval",
    "omega_eval",
    "member_log_fprime",
    "special_curvature",
]


def _unit_normalized(w: complex, what: str) -> complex:
    m = abs(w)
    if abs(m - 1.0) > 1e-12:
        raise ValueError(f"require |{what}| = 1, got {m}")
    return w / m


@dataclass(frozen=True)
class ConstantInner:
    """psi(z) = c0 with |c0| <= 1."""

    c0: complex

    def __post_init__(self) -> None:
        c0 = complex(self.c0)
        m = abs(c0)
        if m > 1.0 + 1e-12:
            raise ValueError(f"require |c0| <= 1, got {m}")
        if m > 1.0:
            c0 = c0 / m
        object.__setattr__(self, "c0", c0)


@dataclass(frozen=True)
class MonomialInner:
    """psi(z) = coefficient * z^degree with |coefficient| <= 1, degree >= 0."""

    degree: int
    coefficient: complex = 1.0

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("require degree >= 0")
        c = complex(self.coefficient)
        m = abs(c)
        if m > 1.0 + 1e-12:
            raise ValueError(f"require |coefficient| <= 1, got {m}")
        if m > 1.0:
            c = c / m
        object.__setattr__(self, "coefficient", c)


@dataclass(frozen=True)
class BlaschkeInner:
    """psi(z) = scale * rotation * prod_j (z - alpha_j)/(1 - conj(alpha_j) z)."""

    zeros: tuple[complex, ...]
    rotation: complex = 1.0
    scale: float = 1.0

    def __post_init__(self) -> None:
        zeros = tuple(complex(a) for a in self.zeros)
        if any(abs(a) >= 1.0 for a in zeros):
            raise ValueError("require all Blaschke zeros inside the open disk")
        if not 0.0 <= self.scale <= 1.0:
            raise ValueError(f"require scale in [0, 1], got {self.scale}")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "rotation", _unit_normalized(complex(self.rotation), "rotation"))
        object.__setattr__(self, "scale", float(self.scale))


InnerFunction = Union[ConstantInner, MonomialInner, BlaschkeInner]


def inner_eval(psi: InnerFunction, z):
    """Evaluate an inner function at scalar or ndarray z with |z| <= 1."""
    if isinstance(psi, ConstantInner):
        return psi.c0 + 0.0 * z
    if isinstance(psi, MonomialInner):
        return psi.coefficient * z**psi.degree
    if isinstance(psi, BlaschkeInner):
        out = psi.scale * psi.rotation + 0.0 * z
        for alpha in psi.zeros:
            out = out * (z - alpha) / (1.0 - np.conjugate(alpha) * z)
        return out
    raise TypeError(f"not an inner function: {psi!r}")


def sample_inner(seed: int, complexity: int, zero_radius: float = 0.9) -> InnerFunction:
    """Draw a reproducible inner function.

    complexity 0 gives a constant; complexity k >= 1 gives a Blaschke product
    with k zeros of modulus <= zero_radius, uniform scale in [0, 1] and a
    uniform rotation.  Identical (seed, complexity) always reproduce the same
    sampled parameters.
    """
    if seed < 0:
        raise ValueError("require seed >= 0")
    if complexity < 0:
        raise ValueError("require complexity >= 0")
    rng = np.random.default_rng((int(seed), int(complexity)))
    if complexity == 0:
        m = rng.uniform(0.0, 1.0)
        phi = rng.uniform(-np.pi, np.pi)
        return ConstantInner(m * np.exp(1j * phi))
    radii = rng.uniform(0.0, zero_radius, size=complexity)
    angles = rng.uniform(-np.pi, np.pi, size=complexity)
    zeros = tuple(radii * np.exp(1j * angles))
    scale = rng.uniform(0.0, 1.0)
    rotation = np.exp(1j * rng.uniform(-np.pi, np.pi))
    return BlaschkeInner(zeros=zeros, rotation=rotation, scale=scale)


@dataclass(frozen=True)
class ConstrainedSchwarz:
    """omega(z) = z delta(z psi(z), lambda): the Schwarz function of one member.

    omega(0) = 0, omega'(0) = lambda and |omega| < 1 on the open disk, all by
    construction.
    """

    inner: InnerFunction
    lam: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", complex(self.lam))
        if abs(self.lam) >= 1.0:
            raise ValueError(f"require |lambda| < 1, got |lambda| = {abs(self.lam)}")


def omega_eval(s: ConstrainedSchwarz, z):
    """omega(z) for scalar or ndarray z with |z| < 1."""
    return z * mobius_delta(z * inner_eval(s.inner, z), s.lam)


def member_log_fprime(s: ConstrainedSchwarz, params: JanowskiParams, z):
    """log f'(z) = ((A-B)/B) Log(1 + B omega(z)) for the member induced by s."""
    return params.exponent * np.log(1.0 + params.B * omega_eval(s, z))


def special_curvature(params: JanowskiParams, z):
    """1 + z f''/f' for the member with Schwarz function z^2.

    Equals (1 + (2A - B) z^2)/(1 + B z^2); for real z near 1 this exits the
    curvature disk of the convex Janowski subclass whenever B < 1, witnessing
    that the containing class is strictly larger.
    """
    z2 = z * z
    return (1.0 + (2.0 * params.A - params.B) * z2) / (1.0 + params.B * z2)
