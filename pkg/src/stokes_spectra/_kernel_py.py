"""Pure-Python Faddeeva / dispersion kernel.

Fallback used when the compiled ``_kernel`` extension is unavailable.
Every routine is restricted to the closed upper half plane; callers
reflect lower-half-plane arguments themselves.
"""

import numpy as np

from ._coeffs import (
    CF_DEPTH,
    CF_RADIUS,
    SERIES,
    SERIES_RADIUS,
    SQRT_PI,
    WEIDEMAN,
    WEIDEMAN_L,
)

BACKEND = "python"


def _w_series(z):
    iz = 1j * z
    acc = 0j
    for c in reversed(SERIES):
        acc = acc * iz + c
    return acc


def _w_weideman(z):
    denom = WEIDEMAN_L - 1j * z
    big_z = (WEIDEMAN_L + 1j * z) / denom
    p = 0j
    for c in WEIDEMAN:
        p = p * big_z + c
    return 2.0 * p / (denom * denom) + (1.0 / SQRT_PI) / denom


def _cf_tail(z):
    # r in Z(z) = -1/(z - r); r = (1/2)/(z - 1/(z - (3/2)/(z - ...)))
    t = 0.0 * z
    for k in range(CF_DEPTH, 0, -1):
        t = (0.5 * k) / (z - t)
    return t


def faddeeva(z):
    """w(z) = exp(-z^2) erfc(-iz) for Im z >= 0."""
    z = complex(z)
    r = abs(z)
    if r < SERIES_RADIUS:
        return _w_series(z)
    if r < CF_RADIUS:
        return _w_weideman(z)
    return 1j / (SQRT_PI * (z - _cf_tail(z)))


def lambda0_upper(z):
    """lambda0(z) = 1 + z Z(z) for Im z >= 0 (upper boundary value on the axis)."""
    z = complex(z)
    r = abs(z)
    if r < SERIES_RADIUS:
        return 1.0 + 1j * SQRT_PI * z * _w_series(z)
    if r < CF_RADIUS:
        return 1.0 + 1j * SQRT_PI * z * _w_weideman(z)
    t = _cf_tail(z)
    return -t / (z - t)


def plasma_z_upper(z):
    """Plasma dispersion function Z(z) = i sqrt(pi) w(z) for Im z >= 0."""
    z = complex(z)
    if abs(z) < CF_RADIUS:
        return 1j * SQRT_PI * faddeeva(z)
    return -1.0 / (z - _cf_tail(z))


def dlambda0_upper(z):
    """lambda0'(z) = Z - 2 z lambda0 for Im z >= 0.

    Beyond the continued-fraction radius the difference is rewritten as
    ``t2 / ((z - t2)(z - t1))`` with the first two tails, because both
    terms are ~ -1/z and cancel to O(z^-3).
    """
    z = complex(z)
    if abs(z) < CF_RADIUS:
        zf = 1j * SQRT_PI * faddeeva(z)
        return zf - 2.0 * z * (1.0 + z * zf)
    t = 0.0 * z
    for k in range(CF_DEPTH, 1, -1):
        t = (0.5 * k) / (z - t)
    t1 = 0.5 / (z - t)
    return t / ((z - t) * (z - t1))


def lambda0_real(mu):
    """Principal-value part 1 - 2 mu D(mu) on the real axis."""
    x = abs(float(mu))
    if x < SERIES_RADIUS:
        return 1.0 - SQRT_PI * x * _w_series(complex(x, 0.0)).imag
    if x < CF_RADIUS:
        return 1.0 - SQRT_PI * x * _w_weideman(complex(x, 0.0)).imag
    t = _cf_tail(x)
    return -t / (x - t)


def lambda0_upper_array(z):
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    flat_z = z.ravel()
    flat = out.ravel()
    for i in range(flat_z.size):
        flat[i] = lambda0_upper(flat_z[i])
    return out


def lambda0_real_array(mu):
    mu = np.asarray(mu, dtype=float)
    out = np.empty_like(mu)
    flat_mu = mu.ravel()
    flat = out.ravel()
    for i in range(flat_mu.size):
        flat[i] = lambda0_real(flat_mu[i])
    return out
