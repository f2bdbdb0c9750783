"""Quadrature engines shared by the spectral and mode modules.

Integrands are vectorized callables: they receive a 1-D float array and
must return an array of the same length (real or complex). Callbacks may
be invoked from several threads at once and must be reentrant.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, GridError

DEFAULT_TOL = 1e-10
NODE_BUDGET = 2**16
GRID_KINDS = ("uniform", "gauss-weighted", "gauss-legendre", "adaptive")

# Gauss-Kronrod 7-15 on [-1, 1]
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)
_KX = np.concatenate((-_XGK[:-1], _XGK[::-1]))
_KW = np.concatenate((_WGK[:-1], _WGK[::-1]))
# Gauss nodes are the odd-indexed Kronrod nodes
_GW = np.zeros(15)
_GW[1::2] = np.concatenate((_WG[:-1], _WG[::-1]))


@dataclass(frozen=True)
class Grid:
    """Quadrature nodes with plain (unweighted) integration weights."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise GridError("nodes and weights must be non-empty 1-D arrays of equal length")
        if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
            raise GridError("grid nodes and weights must be finite")
        if np.any(np.diff(nodes) <= 0):
            raise GridError("grid nodes must be strictly increasing")
        if self.kind not in GRID_KINDS:
            raise GridError(f"unknown grid kind {self.kind!r}")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return self.nodes.size

    def integrate(self, values):
        return np.dot(self.weights, values)


def gauss_legendre_grid(a, b, n) -> Grid:
    x, w = np.polynomial.legendre.leggauss(n)
    half = 0.5 * (b - a)
    return Grid(a + half * (x + 1.0), half * w, "gauss-legendre")


def uniform_grid(start, stop, n) -> Grid:
    """Composite trapezoid rule on ``n`` equispaced nodes."""
    x = np.linspace(start, stop, n)
    w = np.full(n, (stop - start) / (n - 1))
    w[0] *= 0.5
    w[-1] *= 0.5
    return Grid(x, w, "uniform")


@lru_cache(maxsize=16)
def _halfrange_hermite(n):
    # Discretized Stieltjes procedure on a panel Gauss-Legendre measure
    # for exp(-x^2) dx on [0, 13]; exp(-169) is far below double precision.
    panels = np.linspace(0.0, 13.0, 53)
    gx, gw = np.polynomial.legendre.leggauss(40)
    xs, ws = [], []
    for a, b in zip(panels[:-1], panels[1:]):
        h = 0.5 * (b - a)
        xs.append(a + h * (gx + 1.0))
        ws.append(h * gw)
    x = np.concatenate(xs)
    wt = np.concatenate(ws) * np.exp(-x * x)
    alpha = np.zeros(n)
    beta = np.zeros(n)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    norm = wt.sum()
    beta[0] = norm
    for k in range(n):
        alpha[k] = np.dot(wt, x * p * p) / norm
        if k + 1 == n:
            break
        p_next = (x - alpha[k]) * p - (beta[k] if k > 0 else 0.0) * p_prev
        norm_next = np.dot(wt, p_next * p_next)
        beta[k + 1] = norm_next / norm
        p_prev, p, norm = p, p_next, norm_next
    jacobi = np.diag(alpha) + np.diag(np.sqrt(beta[1:]), 1) + np.diag(np.sqrt(beta[1:]), -1)
    nodes, vecs = np.linalg.eigh(jacobi)
    weights = beta[0] * vecs[0, :] ** 2
    return nodes, weights


def halfrange_hermite_grid(n) -> Grid:
    """Gauss rule for ``integral_0^inf exp(-x^2) p(x) dx``, exact to degree ``2n-1``.

    Weights are stored unweighted (multiplied by ``exp(x_i^2)``) so that
    ``grid.integrate(f(x))`` approximates ``integral_0^inf f``; the
    Gaussian factor is part of ``f``.
    """
    if not 1 <= n <= 64:
        raise GridError(f"half-range Hermite rule supports 1..64 nodes, got {n}")
    x, w = _halfrange_hermite(n)
    return Grid(x, w * np.exp(x * x), "gauss-weighted")


def adaptive_quad(f, a, b, tol=DEFAULT_TOL, budget=NODE_BUDGET, initial=8):
    """Globally adaptive Gauss-Kronrod 7-15 quadrature of ``f`` over ``[a, b]``.

    Returns ``(value, error_estimate, evaluations)``. Stops once the summed
    error estimate drops below ``max(tol, 50 eps |value|)``.

    Raises
    ------
    ConvergenceError
        When more than ``budget`` integrand evaluations would be needed.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("adaptive_quad needs a finite interval")
    if a == b:
        return 0.0, 0.0, 0
    edges = np.linspace(a, b, initial + 1)
    lo, hi = edges[:-1], edges[1:]
    vals, errs = _gk_batch(f, lo, hi)
    evaluations = 15 * initial
    heap = [(-abs(e), i, l, h, v, e) for i, (l, h, v, e) in enumerate(zip(lo, hi, vals, errs))]
    heapq.heapify(heap)
    total = np.sum(vals)
    err_total = float(np.sum(np.abs(errs)))
    counter = len(heap)
    eps_floor = 50.0 * np.finfo(float).eps
    while err_total > max(tol, eps_floor * abs(total)):
        if evaluations + 30 > budget:
            raise ConvergenceError(
                f"adaptive quadrature exceeded {budget} nodes (error estimate {err_total:.3g})",
                budget=budget,
                error=err_total,
            )
        # refine a batch of the worst panels per integrand call
        batch = [heapq.heappop(heap) for _ in range(min(len(heap), 8))]
        blo, bhi = [], []
        for _, _, l, h, v, e in batch:
            m = 0.5 * (l + h)
            blo += [l, m]
            bhi += [m, h]
            total -= v
            err_total -= abs(e)
        if bhi[1] - blo[1] <= 1e-15 * max(1.0, abs(blo[1])):
            raise ConvergenceError("adaptive quadrature interval collapsed below resolution")
        blo, bhi = np.array(blo), np.array(bhi)
        vals, errs = _gk_batch(f, blo, bhi)
        evaluations += 15 * blo.size
        for l, h, v, e in zip(blo, bhi, vals, errs):
            counter += 1
            heapq.heappush(heap, (-abs(e), counter, l, h, v, e))
            total += v
            err_total += abs(e)
        err_total = max(err_total, 0.0)
    # re-sum to shed the drift from incremental updates
    total = sum(item[4] for item in heap)
    return total, err_total, evaluations


def _gk_batch(f, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = (mid[:, None] + half[:, None] * _KX[None, :]).ravel()
    y = np.asarray(f(x)).reshape(lo.size, 15)
    kron = half * (y @ _KW)
    gauss = half * (y @ _GW)
    return kron, kron - gauss


def tail_cutoff(tol):
    """Smallest convenient mu_max with exp(-mu_max^2) < tol/10."""
    return math.sqrt(math.log(10.0 / tol)) + 0.5


def integrate_gauss_halfline(f, tol=DEFAULT_TOL, mu_max=None):
    """``integral_0^inf exp(-mu^2) f(mu) dmu`` for ``f`` bounded on ``[0, mu_max]``.

    The range is truncated where the Gaussian tail falls below ``tol/10``.
    """
    if mu_max is None:
        mu_max = tail_cutoff(tol)
    value, _, _ = adaptive_quad(lambda x: np.exp(-x * x) * f(x), 0.0, mu_max, tol)
    return value


def pv_log_term(pole, mu_max):
    """``PV integral_0^mu_max dmu / (pole - mu) = ln(pole / (mu_max - pole))``."""
    return math.log(pole / (mu_max - pole))


def pv_integral(f, pole, tol=DEFAULT_TOL, mu_max=None):
    """Principal value ``PV integral_0^mu_max f(mu) / (pole - mu) dmu``.

    Uses the subtraction ``f(mu) = [f(mu) - f(pole)] + f(pole)``: the
    regular part is integrated adaptively on either side of the pole and
    the constant part contributes ``f(pole) * ln(pole / (mu_max - pole))``.
    ``mu_max`` defaults to ``max(8, pole + 8)``.

    Raises
    ------
    DomainError
        If ``pole <= 0`` or ``pole >= mu_max``.
    """
    pole = float(pole)
    if mu_max is None:
        mu_max = max(8.0, pole + 8.0)
    if not 0.0 < pole < mu_max:
        raise DomainError(f"pole must lie inside (0, {mu_max}), got {pole}", pole=pole, mu_max=mu_max)
    f_pole = np.asarray(f(np.array([pole])))[0]

    def regular(x):
        return (f(x) - f_pole) / (pole - x)

    left, _, _ = adaptive_quad(regular, 0.0, pole, 0.5 * tol)
    right, _, _ = adaptive_quad(regular, pole, mu_max, 0.5 * tol)
    return left + right + f_pole * pv_log_term(pole, mu_max)


def cubic_interpolant(grid: Grid, values):
    """Piecewise-cubic (not-a-knot spline) interpolant of complex samples on ``grid``."""
    from scipy.interpolate import CubicSpline

    return CubicSpline(grid.nodes, np.asarray(values, dtype=complex))
