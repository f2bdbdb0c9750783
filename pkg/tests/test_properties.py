"""Property-based checks of the structural invariants."""

import math

import numpy as np
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy.special import gamma, wofz

from stokes_spectra import cli, dispersion as d, modes as md, numerics as nm, spectra as sp, zeros as zr
from stokes_spectra.spectra import through_origin_frequency

SQRT_PI = math.sqrt(math.pi)
JUMP = through_origin_frequency()

reals = st.floats(-30, 30, allow_nan=False)
off_axis = st.builds(complex, reals, st.floats(1e-6, 30)).flatmap(
    lambda z: st.sampled_from([z, -z, z.conjugate(), -z.conjugate()])
)
mus = st.floats(1e-6, 6.0)
omegas = st.floats(0.0, 3.0)
sub = st.floats(0.02, JUMP - 5e-3)
sup = st.floats(JUMP + 2e-3, 5.0)


@given(off_axis)
def test_parity(z):
    assert abs(d.lambda0(z) - d.lambda0(-z)) <= 1e-11


@given(off_axis)
def test_conjugate_reflection(z):
    assert abs(d.lambda0(-z.conjugate()) - d.lambda0(z).conjugate()) <= 1e-15


@given(st.builds(complex, st.floats(-12, 12), st.floats(1e-3, 12)))
def test_kernel_vs_reference_faddeeva(z):
    ref = 1 + 1j * SQRT_PI * z * wofz(z)
    assert abs(d.lambda0(z) - ref) <= 1e-12 * max(1.0, abs(ref))


@given(mus, omegas)
def test_sokhotski_jump_and_half_sum(mu, w):
    bp = d.boundary_values(mu, w)
    assert abs(bp.jump - 2j * SQRT_PI * mu * math.exp(-mu * mu)) < 1e-10
    assert abs(bp.half_sum.imag + w) < 1e-15
    assert abs(d.lambda0_real(mu) - bp.lambda_plus.real) < 1e-11


@given(st.floats(5.0, 50.0), st.floats(0.05, math.pi - 0.05), omegas)
def test_laurent_remainder(r, angle, w):
    z = r * complex(math.cos(angle), math.sin(angle))
    assert abs(d.lambda_(z, w) - d.laurent_tail(z, w, 3)) <= 10.0 * r**-8 + 1e-15


@given(mus, st.floats(0.0, 3.0))
def test_g_closed_form(mu, w):
    assert abs(sp.g_of_mu(mu, w) - sp.g_closed_form(mu, w)) < 1e-11


@given(st.floats(1e-4, 0.3), omegas)
def test_first_quadrant_departure(mu, w):
    assume(mu < 0.5)
    assert sp.g_of_mu(mu, w).imag > 0


@given(st.floats(0.0, JUMP - 2e-3))
def test_index_one_below_jump(w):
    assert sp.index_kappa(w) == 1
    assert zr.count_zeros(w) == 2


@given(sup)
def test_index_zero_above_jump(w):
    assert sp.index_kappa(w) == 0
    assert zr.count_zeros(w) == 0


@given(st.one_of(st.floats(0.05, JUMP - 2e-3), sup))
def test_encirclement_criterion(w):
    assert sp.encircles_origin(w) == (sp.index_kappa(w) == 1)


@given(sub)
def test_zero_selection_unique(w):
    rep = zr.find_eta0(w)
    z0 = rep.omega1.z0
    assert rep.residual < 1e-10
    assert ((z0 / rep.eta0).real > 0) and not ((z0 / -rep.eta0).real > 0)
    assert abs(d.lambda_(-rep.eta0, w)) < 1e-10


@given(st.floats(0.0, 5.0))
def test_report_invariants(w):
    assume(abs(w - JUMP) > 1e-5 and (w == 0 or w >= zr.MIN_OMEGA1))
    rep = zr.spectrum_report(w)
    assert (rep.eta0 is not None) == (rep.regime == zr.SUBCRITICAL)
    if rep.zero_count is not None:
        assert rep.zero_count % 2 == 0


@given(st.floats(0.1, 5.0), st.floats(-3.0, 3.0))
def test_pv_shift_consistency(pole, c):
    f = lambda m: np.exp(-m * m) * np.sin(m)  # noqa: E731
    a = nm.pv_integral(f, pole, mu_max=8.0 + pole)
    b = nm.pv_integral(lambda m: f(m) + c, pole, mu_max=8.0 + pole)
    assert abs((b - a) - c * nm.pv_log_term(pole, 8.0 + pole)) < 1e-9


@given(st.lists(st.floats(-2, 2), min_size=1, max_size=12))
def test_gauss_halfline_polynomial_exactness(coeffs):
    g = nm.halfrange_hermite_grid(8)
    vals = np.polynomial.polynomial.polyval(g.nodes, coeffs) * np.exp(-g.nodes**2)
    ref = sum(c * 0.5 * gamma((k + 1) / 2) for k, c in enumerate(coeffs))
    assert abs(g.integrate(vals) - ref) <= 1e-13 * max(1.0, sum(abs(c) * 0.5 * gamma((k + 1) / 2) for k, c in enumerate(coeffs)))


@given(st.floats(0.05, 8.0), st.sampled_from([0.0, 0.5, 1.3]))
def test_continuous_mode_normalization(eta, w):
    assert abs(md.continuous_mode(eta, w).moment() - complex(1, -w)) < 1e-9


@given(
    st.floats(0.05, 0.65),
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.floats(0.0, 4.0),
    st.floats(-4.0, 4.0),
)
def test_single_mode_expansion_residual(w, a0, x1, mu):
    e = md.ModeExpansion(w, a0, md.default_eta_grid(), np.zeros(md.ETA_NODES))
    assert abs(md.kinetic_residual(e, x1, mu, w)) < 1e-8 * max(1.0, abs(a0))


@given(st.integers(0, 2**32 - 1), st.floats(-3, 3), st.floats(0, 2))
def test_superposition(seed, mu, x1):
    rng = np.random.default_rng(seed)
    g = md.default_eta_grid()
    a1 = rng.normal(size=g.nodes.size) * np.exp(-g.nodes)
    a2 = rng.normal(size=g.nodes.size) * np.exp(-g.nodes) * 1j
    c = complex(*rng.normal(size=2))
    e1, e2 = md.ModeExpansion(0.4, 0j, g, a1), md.ModeExpansion(0.4, 0j, g, a2)
    e = md.ModeExpansion(0.4, 0j, g, a1 + c * a2)
    lhs, rhs = e(x1, mu), e1(x1, mu) + c * e2(x1, mu)
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))


@given(st.integers(0, 2**32 - 1), st.floats(0.0, 2.0))
def test_expansion_json_round_trip(seed, w):
    rng = np.random.default_rng(seed)
    g = md.default_eta_grid()
    a = rng.normal(size=g.nodes.size) + 1j * rng.normal(size=g.nodes.size)
    e = md.ModeExpansion(w, 0j, g, a)
    back = md.ModeExpansion.from_json(e.to_json())
    np.testing.assert_array_equal(back.a_values, e.a_values)
    np.testing.assert_array_equal(back.grid.weights, e.grid.weights)
    assert back(0.3, 0.7) == e(0.3, 0.7)


@given(st.floats(0.0, 3.0).filter(lambda w: abs(w - JUMP) > 2e-3))
def test_cli_determinism(w):
    a = cli.render(*cli.cmd_index(_ns(w)), None)
    b = cli.render(*cli.cmd_index(_ns(w)), None)
    assert a == b


def _ns(w):
    import argparse

    return argparse.Namespace(omega1=[w], grid=None, tol=1e-10, format=None)
