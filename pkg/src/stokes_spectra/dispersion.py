"""Dispersion function of the linearized BGK equation for an oscillating wall.

    lambda0(z) = (1/sqrt(pi)) * integral exp(-t^2) t / (t - z) dt = 1 + z Z(z)
    lambda(z)  = -i*omega1 + lambda0(z)

``lambda0`` is sectionally analytic with the real axis as its jump line.
Off the axis it is evaluated by the Faddeeva kernel; on the axis the two
boundary values are assembled from the principal-value part
``lambda0_real`` and the jump ``s(mu) = sqrt(pi) mu exp(-mu^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernel
from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)

# |Im z| below AXIS_TOL * max(1, |Re z|) counts as on the real axis
AXIS_TOL = 1e-13

# lambda(z) + i*omega1 ~ sum_k c_k z^(-2k), c_{k+1}/c_k = (2k+1)/2
LAURENT_MIN_RADIUS = 4.0
MAX_LAURENT_TERMS = 3


@dataclass(frozen=True)
class Omega1:
    """Dimensionless oscillation frequency omega*tau (non-negative)."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v) or v < 0.0:
            raise DomainError(f"omega1 must be finite and >= 0, got {self.value!r}", omega1=self.value)
        object.__setattr__(self, "value", v)

    @property
    def z0(self) -> complex:
        """Complex collision-frequency factor 1 - i*omega1."""
        return complex(1.0, -self.value)

    def __float__(self):
        return self.value


def as_omega1(w) -> Omega1:
    return w if isinstance(w, Omega1) else Omega1(w)


@dataclass(frozen=True)
class BoundaryPair:
    """Boundary values lambda^+(mu), lambda^-(mu) from above and below the axis."""

    mu: float
    lambda_plus: complex
    lambda_minus: complex

    @property
    def jump(self) -> complex:
        return self.lambda_plus - self.lambda_minus

    @property
    def half_sum(self) -> complex:
        return 0.5 * (self.lambda_plus + self.lambda_minus)


def _on_axis(z):
    return np.abs(np.imag(z)) < AXIS_TOL * np.maximum(1.0, np.abs(np.real(z)))


def lambda0(z):
    """Plasma-theory dispersion function ``1 + z Z(z)`` off the real axis.

    Accepts a complex scalar or array. Even in ``z``.

    Raises
    ------
    DomainError
        If any argument lies on the real axis (within ``AXIS_TOL``); use
        :func:`boundary_values` or :func:`lambda0_real` there.
    """
    if np.ndim(z) == 0:
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"non-finite argument {z!r}", z=str(z))
        if _on_axis(z):
            raise DomainError(f"lambda0 is discontinuous on the real axis (z={z!r})", z=str(z))
        return kernel.lambda0_upper(-z if z.imag < 0 else z)
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise DomainError("non-finite argument in array")
    if np.any(_on_axis(z)):
        raise DomainError("lambda0 is discontinuous on the real axis; array contains axis points")
    return kernel.lambda0_upper_array(np.where(z.imag < 0, -z, z))


def lambda0_real(mu):
    """Principal-value part of lambda0 on the real axis, ``1 - 2 mu D(mu)``.

    Equals ``Re lambda0^{+-}(mu)``; even in ``mu``; vanishes at ``+-mu0``.
    """
    if np.ndim(mu) == 0:
        return kernel.lambda0_real(float(mu))
    return kernel.lambda0_real_array(np.asarray(mu, dtype=float))


def lambda_(z, w):
    """Dispersion function ``lambda(z) = lambda0(z) - i*omega1``."""
    return lambda0(z) - 1j * as_omega1(w).value


def dlambda0(z):
    """Derivative of lambda0 off the axis, from ``Z' = -2(1 + z Z)``.

    ``lambda0' = Z - 2 z lambda0``; the lower half plane follows from
    evenness, ``lambda0'(z) = -lambda0'(-z)``.
    """
    z = complex(z)
    if _on_axis(z):
        raise DomainError(f"lambda0 is discontinuous on the real axis (z={z!r})", z=str(z))
    if z.imag < 0:
        return -dlambda0(-z)
    return kernel.dlambda0_upper(z)


def s(mu):
    """Half jump of lambda across the axis, ``sqrt(pi) mu exp(-mu^2)``, for mu >= 0."""
    if np.ndim(mu) == 0:
        mu = float(mu)
        if not mu >= 0.0:
            raise DomainError(f"s(mu) is defined for mu >= 0, got {mu!r}", mu=mu)
        return SQRT_PI * mu * math.exp(-mu * mu)
    mu = np.asarray(mu, dtype=float)
    if not np.all(mu >= 0.0):
        raise DomainError("s(mu) is defined for mu >= 0")
    return SQRT_PI * mu * np.exp(-mu * mu)


def boundary_values(mu, w) -> BoundaryPair:
    """Sokhotski boundary values ``lambda^{+-}(mu) = lambda0_real(mu) + i(+-s(mu) - omega1)``.

    The principal-value integral is taken over the whole line; the jump
    is ``2i s(mu)`` and the half-sum is ``lambda0_real(mu) - i*omega1``.
    """
    mu = float(mu)
    if not (mu > 0.0 and math.isfinite(mu)):
        raise DomainError(f"boundary values are defined for mu > 0, got {mu!r}", mu=mu)
    wv = as_omega1(w).value
    re = lambda0_real(mu)
    jump = s(mu)
    return BoundaryPair(mu, complex(re, jump - wv), complex(re, -jump - wv))


def laurent_coefficients(terms=MAX_LAURENT_TERMS):
    """Coefficients of z^-2, z^-4, ... : -1/2, -3/4, -15/8, ..."""
    coeffs = []
    c = -0.5
    for k in range(1, terms + 1):
        coeffs.append(c)
        c *= (2 * k + 1) / 2.0
    return coeffs


def laurent_tail(z, w, terms=MAX_LAURENT_TERMS):
    """Large-|z| partial sum ``-i*omega1 + sum_k c_k z^(-2k)``.

    Raises
    ------
    DomainError
        If ``|z| < 4`` or ``terms`` is not in ``0..3``.
    """
    z = complex(z)
    if abs(z) < LAURENT_MIN_RADIUS:
        raise DomainError(f"Laurent tail needs |z| >= {LAURENT_MIN_RADIUS}, got |z|={abs(z):.6g}", z=str(z))
    if not 0 <= terms <= MAX_LAURENT_TERMS:
        raise DomainError(f"terms must be in 0..{MAX_LAURENT_TERMS}, got {terms}", terms=terms)
    inv2 = 1.0 / (z * z)
    total = 0j
    power = inv2
    for c in laurent_coefficients(terms):
        total += c * power
        power *= inv2
    return total - 1j * as_omega1(w).value
