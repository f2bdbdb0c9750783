"""Eigensolutions of  mu dh/dx1 + z0 h = (1/sqrt(pi)) integral exp(-mu'^2) h(x1, mu') dmu'.

Every solution object here is an *evaluator*: calling it as ``h(x1, mu)``
returns the complex amplitude (vectorized over ``mu``), and ``h.dx(x1, mu)``
returns the analytic x1-derivative. :func:`kinetic_residual` accepts any
such evaluator.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .dispersion import SQRT_PI, Omega1, as_omega1, lambda0_real
from .errors import DomainError, GridError, NoDiscreteSpectrum
from .numerics import (
    DEFAULT_TOL,
    Grid,
    adaptive_quad,
    gauss_legendre_grid,
    integrate_gauss_halfline,
    pv_integral,
    tail_cutoff,
)
from .zeros import find_eta0

ETA_MAX = 8.0
ETA_NODES = 128


def default_eta_grid() -> Grid:
    return gauss_legendre_grid(0.0, ETA_MAX, ETA_NODES)


def full_line_moment(h, x1, tol=DEFAULT_TOL):
    """``integral_{-inf}^{inf} exp(-mu^2) h(x1, mu) dmu`` by quadrature on both half-lines."""
    return integrate_gauss_halfline(lambda m: h(x1, m) + h(x1, -m), tol)


def kinetic_residual(h, x1, mu, w, tol=DEFAULT_TOL):
    """``mu dh/dx1 + z0 h - (1/sqrt(pi)) integral exp(-mu'^2) h dmu'`` at ``(x1, mu)``."""
    om = as_omega1(w)
    if x1 < 0:
        raise DomainError(f"x1 must be >= 0, got {x1}", x1=x1)
    mu_arr = np.atleast_1d(np.asarray(mu, dtype=float))
    rhs = full_line_moment(h, x1, tol) / SQRT_PI
    res = mu_arr * h.dx(x1, mu_arr) + om.z0 * h(x1, mu_arr) - rhs
    return complex(res[0]) if np.ndim(mu) == 0 else res


@dataclass(frozen=True)
class ContinuousMode:
    """Distributional eigenfunction for a point eta of the continuous spectrum (n = 1).

        Phi(eta, mu) = pv_coefficient * P 1/(eta - mu) + exp(eta^2) lambda(eta) delta(eta - mu)

    ``lambda(eta)`` is the half-sum of the boundary values,
    ``lambda0_real(eta) - i omega1``. The factor ``exp(eta^2)`` is kept
    apart and only ever meets the ``exp(-mu^2)`` weight at ``mu = eta``.
    """

    eta: float
    omega1: Omega1
    pv_coefficient: float
    delta_lambda: complex

    @property
    def delta_weight(self) -> complex:
        return math.exp(self.eta**2) * self.delta_lambda

    @property
    def decay(self) -> complex:
        return self.omega1.z0 / self.eta

    def moment(self, x1=0.0, tol=DEFAULT_TOL):
        """``integral exp(-mu^2) h_eta(x1, mu) dmu``; equals ``z0 exp(-x1 z0/eta)``."""
        gauss = lambda m: np.exp(-m * m)  # noqa: E731
        pv_pos = pv_integral(gauss, self.eta, tol)
        neg = integrate_gauss_halfline(lambda m: 1.0 / (self.eta + m), tol)
        pv_part = self.pv_coefficient * (pv_pos + neg)
        # exp(-eta^2) * exp(eta^2) cancels symbolically
        return (pv_part + self.delta_lambda) * np.exp(-x1 * self.decay)


def continuous_mode(eta, w) -> ContinuousMode:
    om = as_omega1(w)
    eta = float(eta)
    if not (eta > 0 and math.isfinite(eta)):
        raise DomainError(f"continuous modes of the problem need eta > 0, got {eta}", eta=eta)
    return ContinuousMode(eta, om, eta / SQRT_PI, complex(lambda0_real(eta), -om.value))


@dataclass(frozen=True)
class DiscreteMode:
    """Decaying discrete eigensolution ``(1/sqrt(pi)) exp(-x1 z0/eta0) eta0/(eta0 - mu)``."""

    eta0: complex
    omega1: Omega1

    @property
    def z0(self) -> complex:
        return self.omega1.z0

    @property
    def decay(self) -> complex:
        return self.z0 / self.eta0

    def kernel(self, mu):
        return self.eta0 / (SQRT_PI * (self.eta0 - np.asarray(mu, dtype=float)))

    def __call__(self, x1, mu):
        return np.exp(-x1 * self.decay) * self.kernel(mu)

    def dx(self, x1, mu):
        return -self.decay * self(x1, mu)

    def moment(self, x1=0.0, tol=DEFAULT_TOL):
        return full_line_moment(self, x1, tol)


def discrete_mode(w) -> DiscreteMode:
    report = find_eta0(w)
    return DiscreteMode(report.eta0, report.omega1)


class ConstantMode:
    """``h(x1, mu) = c``; a solution only for omega1 = 0."""

    def __init__(self, value=1.0):
        self.value = value

    def __call__(self, x1, mu):
        return np.full(np.shape(mu), self.value, dtype=complex)

    def dx(self, x1, mu):
        return np.zeros(np.shape(mu), dtype=complex)


class LinearMode:
    """``h(x1, mu) = x1 - mu``; the second omega1 = 0 solution."""

    def __call__(self, x1, mu):
        return (x1 - np.asarray(mu, dtype=float)).astype(complex)

    def dx(self, x1, mu):
        return np.ones(np.shape(mu), dtype=complex)


def degenerate_modes():
    """The two omega1 = 0 solutions ``h1 = 1`` and ``h2 = x1 - mu``."""
    return ConstantMode(1.0), LinearMode()


@dataclass(frozen=True)
class ModeExpansion:
    """General solution: discrete mode with coefficient ``a0`` plus continuous modes weighted by ``a(eta)``.

    ``a(eta)`` is sampled on ``grid`` over ``(lo, hi]`` and interpolated by
    a cubic spline between nodes; it is taken as zero outside the grid
    interval.
    """

    omega1: Omega1
    a0: complex
    grid: Grid
    a_values: np.ndarray
    interval: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "omega1", as_omega1(self.omega1))
        object.__setattr__(self, "a0", complex(self.a0))
        vals = np.asarray(self.a_values, dtype=complex)
        if vals.shape != self.grid.nodes.shape:
            raise GridError("a_values must have one entry per grid node")
        if not np.all(np.isfinite(vals)):
            raise GridError("a_values must be finite")
        vals.setflags(write=False)
        object.__setattr__(self, "a_values", vals)
        if self.interval is None:
            lo = 0.0
            # a Gauss-Legendre rule on (0, hi) has weights summing to hi
            hi = float(self.grid.weights.sum()) if self.grid.kind == "gauss-legendre" else float(self.grid.nodes[-1])
            object.__setattr__(self, "interval", (lo, hi))
        lo, hi = (float(v) for v in self.interval)
        if not (0.0 <= lo < hi) or self.grid.nodes[0] < lo or self.grid.nodes[-1] > hi:
            raise GridError(f"grid nodes must lie inside the interval {self.interval}")
        if lo != 0.0:
            raise GridError("continuous-spectrum grids must start at eta = 0")
        object.__setattr__(self, "interval", (lo, hi))

    @cached_property
    def eta0(self):
        if self.a0 == 0:
            return None
        try:
            return find_eta0(self.omega1).eta0
        except NoDiscreteSpectrum as exc:
            raise NoDiscreteSpectrum(
                f"a0 = {self.a0} but omega1 = {self.omega1.value} has no discrete mode", omega1=self.omega1.value
            ) from exc

    @cached_property
    def _spline(self):
        from .numerics import cubic_interpolant

        return cubic_interpolant(self.grid, self.a_values)

    def a(self, eta):
        """Continuous coefficient at arbitrary ``eta`` (zero outside the grid interval)."""
        eta = np.asarray(eta, dtype=float)
        lo, hi = self.interval
        inside = (eta > lo) & (eta <= hi)
        out = np.zeros(eta.shape, dtype=complex)
        if np.any(inside):
            out[inside] = self._spline(eta[inside])
        return out

    def __call__(self, x1, mu):
        return assemble_solution(self, x1, mu)

    def dx(self, x1, mu):
        return _assemble(self, x1, mu, derivative=True)

    def to_json(self) -> str:
        payload = {
            "omega1": self.omega1.value,
            "a0": [self.a0.real, self.a0.imag],
            "grid": self.grid.nodes.tolist(),
            "weights": self.grid.weights.tolist(),
            "kind": self.grid.kind,
            "interval": list(self.interval),
            "a": [[v.real, v.imag] for v in self.a_values.tolist()],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ModeExpansion":
        """Inverse of :meth:`to_json`.

        ``weights``, ``kind`` and ``interval`` are optional; without
        weights, trapezoid weights over ``[0, last node]`` are used.
        """
        try:
            d = json.loads(text)
            nodes = np.asarray(d["grid"], dtype=float)
            a = np.asarray(d["a"], dtype=float)
            a0 = d.get("a0", [0.0, 0.0])
            omega1 = float(d["omega1"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GridError(f"malformed expansion JSON: {exc}") from exc
        if a.ndim != 2 or a.shape[1] != 2:
            raise GridError("'a' must be a list of [re, im] pairs")
        if "weights" in d:
            weights = np.asarray(d["weights"], dtype=float)
            kind = d.get("kind", "gauss-legendre")
        else:
            edges = np.concatenate(([0.0], nodes))
            h = np.diff(edges)
            weights = 0.5 * (h + np.append(h[1:], 0.0))
            weights[0] += 0.5 * h[0]
            kind = "adaptive"
        interval = tuple(d["interval"]) if "interval" in d else (0.0, float(nodes[-1]))
        return cls(Omega1(omega1), complex(a0[0], a0[1]), Grid(nodes, weights, kind), a[:, 0] + 1j * a[:, 1], interval)


def _assemble(exp: ModeExpansion, x1, mu, derivative=False):
    if x1 < 0:
        raise DomainError(f"x1 must be >= 0, got {x1}", x1=x1)
    z0 = exp.omega1.z0
    mu_in = np.asarray(mu, dtype=float)
    m = np.atleast_1d(mu_in)
    out = np.zeros(m.shape, dtype=complex)

    if exp.a0 != 0:
        eta0 = exp.eta0
        disc = exp.a0 * np.exp(-x1 * z0 / eta0) / (eta0 - m)
        out += -z0 / eta0 * disc if derivative else disc

    if np.any(exp.a_values != 0):
        out += _continuous_part(exp, x1, m, derivative)
    return complex(out[0]) if mu_in.ndim == 0 else out


def _continuous_part(exp, x1, m, derivative):
    z0 = exp.omega1.z0
    lo, hi = exp.interval
    nodes, weights = exp.grid.nodes, exp.grid.weights

    def integrand_numerator(eta, a_eta):
        # F(eta) = exp(-x1 z0/eta) eta a(eta) / sqrt(pi)  (times -z0/eta for d/dx1)
        f = _decay(x1, z0, eta) * eta * a_eta / SQRT_PI
        return -z0 / eta * f if derivative else f

    f_nodes = integrand_numerator(nodes, exp.a_values)
    out = np.zeros(m.shape, dtype=complex)

    regular = (m <= lo) | (m > hi)
    if np.any(regular):
        out[regular] = (f_nodes[None, :] / (nodes[None, :] - m[regular, None])) @ weights

    inside = ~regular
    if np.any(inside):
        mi = m[inside]
        a_mu = exp.a(mi)
        f_mu = integrand_numerator(mi, a_mu)
        diff = nodes[None, :] - mi[:, None]
        hit = diff == 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            quot = (f_nodes[None, :] - f_mu[:, None]) / diff
        if np.any(hit):
            rows, cols = np.nonzero(hit)
            quot[rows, cols] = _numerator_slope(exp, x1, nodes[cols], derivative)
        pv = quot @ weights + f_mu * (np.log(hi - mi) - np.log(mi - lo))
        # Heaviside term exp(-x1 z0/mu + mu^2) lambda(mu) a(mu)
        lam = lambda0_real(mi) - 1j * exp.omega1.value
        heav = _decay(x1, z0, mi) * np.exp(mi * mi) * lam * a_mu
        if derivative:
            heav = -z0 / mi * heav
        out[inside] = pv + heav
    return out


def _decay(x1, z0, t):
    """``exp(-x1 z0 / t)`` for t > 0, flushed to 0 where the argument would overflow."""
    t = np.asarray(t, dtype=float)
    if x1 == 0:
        return np.ones(t.shape, dtype=complex)
    rate = np.full(t.shape, np.inf)
    ok = t * 700.0 > x1 * z0.real
    rate[ok] = x1 / t[ok]
    out = np.zeros(t.shape, dtype=complex)
    out[ok] = np.exp(-rate[ok] * z0)
    return out


def _numerator_slope(exp, x1, eta, derivative):
    # d/deta of the PV numerator at a node that coincides with mu
    z0 = exp.omega1.z0
    a = exp._spline(eta)
    da = exp._spline(eta, 1)
    e = _decay(x1, z0, eta)
    f = e * eta * a / SQRT_PI
    df = e * (x1 * z0 / eta * a + a + eta * da) / SQRT_PI
    if derivative:
        return -z0 / eta * df + z0 / eta**2 * f
    return df


def assemble_solution(exp: ModeExpansion, x1, mu):
    """Evaluate the general solution h(x1, mu) (vectorized over ``mu``).

        h = a0 exp(-x1 z0/eta0) / (eta0 - mu)
            + (1/sqrt(pi)) PV integral_0^inf exp(-x1 z0/eta) eta a(eta) / (eta - mu) deta
            + exp(-x1 z0/mu + mu^2) lambda(mu) a(mu) theta(mu)

    For ``mu <= 0`` the integral is regular and the Heaviside term absent.
    """
    return _assemble(exp, x1, mu)


def velocity_amplitude(exp: ModeExpansion, x1, tol=DEFAULT_TOL):
    """Complex amplitude ``u(x1) = (1/(2 sqrt(pi))) integral exp(-mu^2) h(x1, mu) dmu``."""
    if not np.any(exp.a_values != 0):
        return full_line_moment(exp, x1, tol) / (2.0 * SQRT_PI) if exp.a0 != 0 else 0j
    # the continuous part kinks at the grid interval ends; split there
    hi = exp.interval[1]
    cut = tail_cutoff(tol)
    g = lambda m: np.exp(-m * m) * exp(x1, m)  # noqa: E731
    neg = integrate_gauss_halfline(lambda m: exp(x1, -m), tol)
    pieces = [(0.0, min(hi, cut))] + ([(hi, cut)] if hi < cut else [])
    pos = sum(adaptive_quad(g, a, b, tol)[0] for a, b in pieces)
    return (neg + pos) / (2.0 * SQRT_PI)


def velocity_moment(exp: ModeExpansion, x1, t1, tol=DEFAULT_TOL) -> float:
    """Gas velocity ``U_y(t1, x1) = Re{exp(-i omega1 t1) u(x1)}``."""
    u = velocity_amplitude(exp, x1, tol)
    return float((np.exp(-1j * exp.omega1.value * t1) * u).real)
