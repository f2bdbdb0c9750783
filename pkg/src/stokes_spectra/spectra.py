"""Real-axis structure of the problem coefficient G(mu) = lambda^+(mu) / lambda^-(mu).

The curve Gamma(omega1) = {G(mu) : 0 <= mu <= inf} starts and ends at 1.
Its winding number about the origin is the index kappa(G), and the
number of zeros of lambda in the cut plane is 2*kappa.

Two frequencies matter:

* ``through_origin_frequency()`` = s(mu0) ~ 0.6973. Im G vanishes for
  mu > 0 only at mu0, where Re G = (omega1 - s(mu0)) / (omega1 + s(mu0)).
  The index therefore drops from 1 to 0 exactly here.
* ``critical_frequency()`` = max sqrt(s^2 - lambda0^2) ~ 0.7328, where
  the two roots of y1 = lambda0^2 - s^2 + omega1^2 merge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .dispersion import as_omega1, lambda0_real, s, Omega1
from .errors import BoundaryIndeterminate, DomainError, SingularCoefficientError, UnwrapError

# half-width of the frequency band around the index jump that is not classified
BOUNDARY_BAND = 1e-3
# root bracketing window for y1 and lambda0_real
ROOT_WINDOW = (0.0, 6.0)
SINGULAR_TOL = 1e-14
TURNS_SLACK = 0.05
# a tangency of y1 closer than this to zero is reported as a double root
DOUBLE_ROOT_TOL = 2e-3


def g_of_mu(mu, w):
    """Problem coefficient ``G(mu) = lambda^+(mu) / lambda^-(mu)`` for ``mu >= 0``.

    Vectorized over ``mu``; ``G(0) = 1``.

    Raises
    ------
    SingularCoefficientError
        Where ``|lambda^-(mu)|`` falls below ``SINGULAR_TOL``.
    """
    wv = as_omega1(w).value
    mu_arr = np.asarray(mu, dtype=float)
    if np.any(mu_arr < 0) or not np.all(np.isfinite(mu_arr)):
        raise DomainError("G(mu) is defined for finite mu >= 0")
    re = lambda0_real(mu_arr)
    jump = s(mu_arr)
    plus = re + 1j * (jump - wv)
    minus = re - 1j * (jump + wv)
    bad = np.abs(minus) < SINGULAR_TOL
    if np.any(bad):
        where = float(np.atleast_1d(mu_arr)[np.atleast_1d(bad)][0])
        raise SingularCoefficientError(f"lambda^-(mu) vanishes at mu={where}", mu=where)
    g = plus / minus
    return complex(g) if np.ndim(mu) == 0 else g


def g_closed_form(mu, w):
    """Real/imaginary split of G from the lambda0, s, omega1 closed forms."""
    wv = as_omega1(w).value
    mu = np.asarray(mu, dtype=float)
    l0 = lambda0_real(mu)
    sv = s(mu)
    denom = l0**2 + (wv + sv) ** 2
    return (l0**2 - sv**2 + wv**2) / denom + 1j * (2.0 * l0 * sv) / denom


@dataclass(frozen=True)
class GammaCurve:
    """Sampled curve Gamma(omega1) with the continuous argument theta(mu)."""

    omega1: Omega1
    mu: np.ndarray
    g: np.ndarray
    theta: np.ndarray
    total_turns: float

    @property
    def samples(self):
        return list(zip(self.mu.tolist(), self.g.tolist(), self.theta.tolist()))

    @property
    def winding(self) -> int:
        """Winding number, rounded when within ``TURNS_SLACK`` of an integer."""
        k = round(self.total_turns)
        if abs(self.total_turns - k) > TURNS_SLACK:
            raise UnwrapError(
                f"argument increment {self.total_turns:.4f} turns is not near an integer",
                omega1=self.omega1.value,
                turns=self.total_turns,
            )
        return int(k)


def trace_gamma(w, mu_max=8.0, step=0.01, max_dtheta=math.pi / 2, origin_tol=1e-9, min_width=1e-13):
    """Sample Gamma(omega1) on ``[0, mu_max]`` and unwrap its argument.

    Starts from a uniform grid of spacing ``step`` and bisects every
    interval across which the principal argument changes by ``max_dtheta``
    or more. ``theta(0) = 0``.

    Raises
    ------
    BoundaryIndeterminate
        If the curve passes within ``origin_tol`` of the origin, or an
        argument jump survives bisection down to ``min_width``.
    """
    om = as_omega1(w)
    n = int(math.ceil(mu_max / step)) + 1
    mu = np.linspace(0.0, mu_max, n)
    g = g_of_mu(mu, om)
    while True:
        _check_origin(g, mu, om, origin_tol)
        dtheta = np.angle(g[1:] / g[:-1])
        coarse = np.abs(dtheta) >= max_dtheta
        if not np.any(coarse):
            break
        idx = np.nonzero(coarse)[0]
        if np.min(mu[idx + 1] - mu[idx]) < min_width:
            where = float(mu[idx[np.argmin(mu[idx + 1] - mu[idx])]])
            raise BoundaryIndeterminate(
                f"argument of G jumps at mu={where:.12g}: curve passes through the origin",
                omega1=om.value,
                mu=where,
            )
        mids = 0.5 * (mu[idx] + mu[idx + 1])
        g_mid = g_of_mu(mids, om)
        mu = np.insert(mu, idx + 1, mids)
        g = np.insert(g, idx + 1, g_mid)
    theta = np.concatenate(([0.0], np.cumsum(np.angle(g[1:] / g[:-1]))))
    theta += np.angle(g[0])
    total = (theta[-1] - theta[0]) / (2.0 * math.pi)
    return GammaCurve(om, mu, g, theta, float(total))


def _check_origin(g, mu, om, origin_tol):
    near = np.abs(g) < origin_tol
    if np.any(near):
        where = float(mu[np.argmax(near)])
        raise BoundaryIndeterminate(
            f"Gamma passes within {origin_tol:g} of the origin at mu={where:.12g}",
            omega1=om.value,
            mu=where,
        )


def check_not_boundary(w):
    om = as_omega1(w)
    jump_at = through_origin_frequency()
    if abs(om.value - jump_at) < BOUNDARY_BAND:
        raise BoundaryIndeterminate(
            f"omega1={om.value} lies within {BOUNDARY_BAND:g} of the index jump at {jump_at:.6f}",
            omega1=om.value,
            jump=jump_at,
        )
    return om


def index_kappa(w) -> int:
    """Index of G: number of positive turns of Gamma(omega1) about the origin."""
    om = check_not_boundary(w)
    return trace_gamma(om).winding


@lru_cache(maxsize=1)
def mu0() -> float:
    """Positive zero of ``lambda0_real`` (~0.924)."""
    grid = np.linspace(*ROOT_WINDOW, 601)
    vals = lambda0_real(grid)
    i = int(np.nonzero(np.diff(np.sign(vals)))[0][0])
    return brentq(lambda m: lambda0_real(m), grid[i], grid[i + 1], xtol=1e-15)


def through_origin_frequency() -> float:
    """``s(mu0)`` (~0.697): Gamma passes through the origin and the index jumps."""
    return s(mu0())


def _excess(mu):
    # s^2 - lambda0^2; y1 = omega1^2 - excess
    return s(mu) ** 2 - lambda0_real(mu) ** 2


@lru_cache(maxsize=1)
def critical_point():
    """``(omega1_star, argmax_mu)`` for ``omega1_star = max sqrt(max(0, s^2 - lambda0^2))``.

    Located by a grid scan followed by bounded Brent refinement.
    """
    grid = np.linspace(*ROOT_WINDOW, 6001)
    vals = _excess(grid)
    i = int(np.argmax(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    res = minimize_scalar(lambda m: -_excess(m), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
    peak = max(-res.fun, 0.0)
    return math.sqrt(peak), float(res.x)


def critical_frequency() -> float:
    """``max_mu sqrt(s^2(mu) - lambda0^2(mu))`` (~0.733), the double-root frequency of y1."""
    return critical_point()[0]


def y1(mu, w):
    """``lambda0^2(mu) - s^2(mu) + omega1^2``."""
    return omega_sq(w) - _excess(mu)


def omega_sq(w):
    return as_omega1(w).value ** 2


@dataclass(frozen=True)
class RootPair:
    """Roots ``mu1 <= mu2`` of y1 on (0, 6); both ``None`` when absent."""

    omega1: Omega1
    mu1: Optional[float]
    mu2: Optional[float]

    @property
    def present(self) -> bool:
        return self.mu1 is not None

    @property
    def double(self) -> bool:
        return self.present and self.mu1 == self.mu2


def y1_roots(w, points=6001) -> RootPair:
    """Roots of y1 by sign-change bracketing and Brent refinement.

    A tangency with ``min y1 <= DOUBLE_ROOT_TOL * omega1_star`` but no
    sign change (``omega1`` within ~1e-3 of the critical frequency) is
    reported as a double root at the minimizer.
    """
    om = as_omega1(w)
    grid = np.linspace(*ROOT_WINDOW, points)
    vals = y1(grid, om)
    changes = np.nonzero(np.diff(np.sign(vals)) != 0)[0]
    roots = []
    for i in changes:
        a, b = grid[i], grid[i + 1]
        if vals[i] == 0.0:
            roots.append(float(a))
            continue
        roots.append(brentq(lambda m: y1(m, om), a, b, xtol=1e-14))
    roots = sorted(r for r in roots if r > 0.0)
    if len(roots) >= 2:
        return RootPair(om, roots[0], roots[-1])
    omega_star, argmax = critical_point()
    tangency = om.value**2 - omega_star**2
    if 0.0 <= tangency <= DOUBLE_ROOT_TOL * omega_star:
        return RootPair(om, argmax, argmax)
    return RootPair(om, None, None)


def encircles_origin(w) -> bool:
    """Encirclement criterion ``mu1(omega1) < mu0 < mu2(omega1)``."""
    pair = y1_roots(w)
    return pair.present and pair.mu1 < mu0() < pair.mu2
