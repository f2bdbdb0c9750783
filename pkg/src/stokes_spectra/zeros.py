"""Discrete spectrum: zeros +-eta0 of the dispersion function in the cut plane."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dispersion import AXIS_TOL, Omega1, as_omega1, dlambda0, lambda0, lambda_
from .errors import ConvergenceError, DomainError, NoDiscreteSpectrum
from .numerics import adaptive_quad
from .spectra import BOUNDARY_BAND, check_not_boundary, through_origin_frequency, trace_gamma

SUBCRITICAL = "subcritical"
SUPERCRITICAL = "supercritical"
BOUNDARY = "boundary"
DEGENERATE = "degenerate_zero_frequency"

RESIDUAL_TOL = 1e-10
NEWTON_MAX_ITER = 100
MULLER_BOX = (0.0, 4.0, 0.0, 4.0)
# below this eta0 ~ 1e100 and lambda0' ~ |eta0|^-3 underflows
MIN_OMEGA1 = 1e-200


@dataclass(frozen=True)
class SpectrumReport:
    omega1: Omega1
    zero_count: Optional[int]
    eta0: Optional[complex]
    regime: str
    residual: Optional[float]

    def as_dict(self):
        out = {
            "omega1": self.omega1.value,
            "regime": self.regime,
            "N": self.zero_count,
            "eta0": None if self.eta0 is None else [self.eta0.real, self.eta0.imag],
            "residual": self.residual,
        }
        if self.eta0 is not None:
            d = self.omega1.z0 / self.eta0
            out["decay"] = [d.real, d.imag]
        return out


def classify_regime(w) -> str:
    """Place omega1 relative to the index jump at ``through_origin_frequency()``."""
    om = as_omega1(w)
    if om.value == 0.0:
        return DEGENERATE
    jump_at = through_origin_frequency()
    if abs(om.value - jump_at) < BOUNDARY_BAND:
        return BOUNDARY
    return SUBCRITICAL if om.value < jump_at else SUPERCRITICAL


def count_zeros(w) -> int:
    """Zeros of lambda off the real axis, ``N = [arg G]_0^inf / pi``."""
    om = check_not_boundary(w)
    curve = trace_gamma(om)
    return 2 * curve.winding


def count_zeros_contour(w, half_width=20.0, gap=0.1, tol=1e-8) -> int:
    """Argument-principle count of zeros of lambda in ``gap < |Im z| < half_width``, ``|Re z| < half_width``.

    Integrates ``lambda'/lambda`` around the two rectangles above and below
    the cut. Independent of G and of the curve tracing.
    """
    wv = as_omega1(w).value
    r, d = half_width, gap

    def log_derivative(z):
        return np.array([dlambda0(zi) / (lambda0(zi) - 1j * wv) for zi in z])

    def segment(a, b):
        def integrand(t):
            return log_derivative(a + (b - a) * t) * (b - a)

        value, _, _ = adaptive_quad(integrand, 0.0, 1.0, tol)
        return value

    upper = [complex(-r, d), complex(r, d), complex(r, r), complex(-r, r)]
    lower = [complex(-r, -r), complex(r, -r), complex(r, -d), complex(-r, -d)]
    total = 0j
    for corners in (upper, lower):
        for a, b in zip(corners, corners[1:] + corners[:1]):
            total += segment(a, b)
    n = total.imag / (2.0 * math.pi)
    k = round(n)
    if abs(n - k) > 0.05:
        raise ConvergenceError(f"contour winding {n:.4f} is not near an integer", omega1=wv)
    return int(k)


def _nudge(z):
    if abs(z.imag) < AXIS_TOL * max(1.0, abs(z.real)) * 10:
        return complex(z.real, 1e-10)
    return z


def newton(f, df, z, max_iter=NEWTON_MAX_ITER, tol=RESIDUAL_TOL):
    """Newton iteration on a complex-analytic ``f``; returns the root or raises."""
    z = _nudge(complex(z))
    for _ in range(max_iter):
        try:
            dz = f(z) / df(z)
            z = _nudge(z - dz)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                break
            if abs(dz) <= 1e-15 * max(1.0, abs(z)) or (abs(dz) < 1e-9 * abs(z) and abs(f(z)) < 0.01 * tol):
                return z
        except (ArithmeticError, DomainError):
            break
    raise ConvergenceError(f"Newton did not converge within {max_iter} iterations", last=str(z))


def muller(f, z0, z1, z2, max_iter=NEWTON_MAX_ITER, tol=1e-15):
    """Muller's method from three starting points."""
    f0, f1, f2 = f(z0), f(z1), f(z2)
    for _ in range(max_iter):
        if not (cmath.isfinite(z2) and abs(z2) < 1e6):
            break
        h1, h2 = z1 - z0, z2 - z1
        d1, d2 = (f1 - f0) / h1, (f2 - f1) / h2
        a = (d2 - d1) / (h2 + h1)
        b = a * h2 + d2
        disc = cmath.sqrt(b * b - 4.0 * f2 * a)
        den = b + disc if abs(b + disc) >= abs(b - disc) else b - disc
        step = -2.0 * f2 / den if den != 0 else 1e-3 * (1 + abs(z2))
        z3 = _nudge(z2 + step)
        if abs(step) <= tol * max(1.0, abs(z3)):
            return z3
        z0, z1, z2 = z1, z2, z3
        try:
            f0, f1, f2 = f1, f2, f(z3)
        except DomainError:
            break
    raise ConvergenceError("Muller search did not converge", last=str(z2))


def _muller_search(w):
    x0, x1, y0, y1 = MULLER_BOX
    xs = np.linspace(x0 + 0.05, x1, 40)
    ys = np.linspace(y0 + 0.02, y1, 40)
    zz = xs[None, :] + 1j * ys[:, None]
    vals = np.abs(lambda0(zz) - 1j * w)
    order = np.argsort(vals, axis=None)
    f = lambda z: lambda_(z, w)  # noqa: E731
    for flat in order[:10]:
        z = complex(zz.ravel()[flat])
        try:
            root = muller(f, z - 0.05, z + 0.05j, z)
        except (ConvergenceError, ArithmeticError):
            continue
        if abs(f(root)) < RESIDUAL_TOL:
            return root
    raise ConvergenceError("Muller fallback found no zero in the first quadrant", omega1=w)


def _continuation(w, start=0.3, step=0.01):
    # march in omega1 from a frequency where the asymptotic seed is reliable
    if w <= start:
        raise ConvergenceError("continuation only helps above the start frequency")
    z = newton(lambda q: lambda_(q, start), dlambda0, seed(start))
    n = int(math.ceil((w - start) / step))
    for wk in np.linspace(start, w, n + 1)[1:]:
        z = newton(lambda q, wk=wk: lambda_(q, wk), dlambda0, z)
    return z


def seed(w) -> complex:
    """Small-frequency asymptote ``(1 + i) / (2 sqrt(omega1))`` of the zero."""
    return (1 + 1j) / (2.0 * math.sqrt(as_omega1(w).value))


def select_decaying(eta, w) -> complex:
    """Return whichever of ``+-eta`` satisfies ``Re(z0 / eta) > 0``."""
    z0 = as_omega1(w).z0
    return eta if (z0 / eta).real > 0 else -eta


def find_eta0(w) -> SpectrumReport:
    """Locate the zero eta0 with ``Re((1 - i omega1)/eta0) > 0``.

    Newton from the asymptotic seed with the analytic derivative. If that
    fails (near the index jump the seed is poor), Newton is continued in
    omega1 from 0.3, and finally a Muller search over the first quadrant
    is tried.

    Raises
    ------
    NoDiscreteSpectrum
        For omega1 = 0 (zeros at infinity) and above the index jump.
    BoundaryIndeterminate
        Within ``BOUNDARY_BAND`` of the index jump.
    DomainError
        For ``0 < omega1 < MIN_OMEGA1``: the zero lies beyond double range.
    """
    om = as_omega1(w)
    regime = classify_regime(om)
    if regime == BOUNDARY:
        check_not_boundary(om)
    if regime == DEGENERATE:
        raise NoDiscreteSpectrum("omega1 = 0: both zeros sit at infinity", omega1=0.0, regime=regime)
    if regime == SUPERCRITICAL:
        raise NoDiscreteSpectrum(
            f"omega1={om.value} is above the index jump: lambda has no zeros off the axis",
            omega1=om.value,
            regime=regime,
        )
    wv = om.value
    if wv < MIN_OMEGA1:
        raise DomainError(f"omega1={wv:g} is below {MIN_OMEGA1:g}: eta0 exceeds double range", omega1=wv)
    f = lambda z: lambda_(z, wv)  # noqa: E731
    root = None
    for attempt in (lambda: newton(f, dlambda0, seed(wv)), lambda: _continuation(wv), lambda: _muller_search(wv)):
        try:
            root = attempt()
        except ConvergenceError:
            continue
        if abs(f(root)) < RESIDUAL_TOL:
            break
    if root is None:
        raise ConvergenceError("no zero found by Newton, continuation or Muller search", omega1=wv)
    eta0 = select_decaying(root, om)
    residual = abs(f(eta0))
    if residual >= RESIDUAL_TOL:
        raise ConvergenceError(f"zero residual {residual:.3g} above {RESIDUAL_TOL}", omega1=wv)
    return SpectrumReport(om, count_zeros(om), eta0, regime, residual)


def spectrum_report(w) -> SpectrumReport:
    """Report for any omega1 >= 0; never raises for an empty discrete spectrum."""
    om = as_omega1(w)
    regime = classify_regime(om)
    if regime == SUBCRITICAL:
        return find_eta0(om)
    if regime == BOUNDARY:
        return SpectrumReport(om, None, None, regime, None)
    if regime == DEGENERATE:
        # both zeros merge at infinity; the winding of Gamma(0) still counts them
        return SpectrumReport(om, count_zeros(om), None, regime, None)
    return SpectrumReport(om, count_zeros(om), None, regime, None)


def eta0_trajectory(omegas):
    """eta0 along a frequency sweep, continued from the previous root."""
    out = []
    prev = None
    for wv in omegas:
        om = check_not_boundary(wv)
        f = lambda z: lambda_(z, om.value)  # noqa: E731
        start = prev if prev is not None else seed(om.value)
        try:
            root = select_decaying(newton(f, dlambda0, start), om)
        except ConvergenceError:
            root = find_eta0(om).eta0
        out.append(root)
        prev = root
    return out
