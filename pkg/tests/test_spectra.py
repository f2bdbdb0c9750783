import math

import numpy as np
import pytest

from stokes_spectra import spectra as sp
from stokes_spectra.dispersion import boundary_values, lambda0_real, s
from stokes_spectra.errors import BoundaryIndeterminate, DomainError, UnwrapError

from oracles import ARGMAX_MU, MU0, OMEGA1_STAR, S_MU0, Y1_ROOTS

JUMP = S_MU0  # frequency at which Gamma passes through the origin


class TestG:
    def test_origin_value(self):
        assert sp.g_of_mu(0.0, 0.4) == 1
        assert abs(sp.g_of_mu(1e-9, 0.4) - 1) < 1e-8

    def test_crosses_minus_one_at_mu0(self):
        assert abs(sp.g_of_mu(MU0, 0.0) + 1) < 1e-13

    @pytest.mark.parametrize("w", [0.2, 0.5, 1.0])
    def test_closed_form(self, w):
        mu = np.linspace(1e-3, 6, 500)
        assert np.max(np.abs(sp.g_of_mu(mu, w) - sp.g_closed_form(mu, w))) < 1e-11

    def test_ratio_of_boundary_values(self):
        bp = boundary_values(1.1, 0.3)
        assert abs(sp.g_of_mu(1.1, 0.3) - bp.lambda_plus / bp.lambda_minus) < 1e-15

    def test_negative_mu(self):
        with pytest.raises(DomainError):
            sp.g_of_mu(-0.1, 0.5)

    def test_closedness_at_8(self):
        for w in (0.0, 0.3, 0.5, 1.0, 1.5, 3.0):
            assert abs(sp.g_of_mu(8.0, w) - 1) < 1e-6

    def test_first_quadrant_departure(self):
        for w in (0.0, 0.1, 0.5, 1.0):
            g = sp.g_of_mu(1e-3, w)
            assert g.imag > 0


class TestTrace:
    @pytest.mark.parametrize("w,turns", [(0.5, 1), (1.0, 0), (1.5, 0), (0.0, 1), (0.1, 1), (0.69, 1), (0.71, 0)])
    def test_total_turns(self, w, turns):
        c = sp.trace_gamma(w)
        assert abs(c.total_turns - turns) < 1e-6
        assert c.winding == turns

    def test_unwrap_validity(self):
        c = sp.trace_gamma(0.05, step=1.0)
        assert c.theta[0] == 0.0 and c.g[0] == 1
        assert np.all(np.abs(np.diff(c.theta)) < math.pi / 2)
        assert c.mu.size > 9  # bisected around the fast swing near mu0
        assert c.winding == 1
        assert len(c.samples) == c.mu.size

    def test_through_origin_is_indeterminate(self):
        with pytest.raises(BoundaryIndeterminate):
            sp.trace_gamma(JUMP)

    def test_unwrap_error_on_fractional_turns(self):
        c = sp.trace_gamma(0.5, mu_max=0.9)
        with pytest.raises(UnwrapError):
            c.winding


class TestIndex:
    @pytest.mark.parametrize("w", [0.0, 0.1, 0.3, 0.5, 0.69])
    def test_one_below_jump(self, w):
        assert sp.index_kappa(w) == 1

    @pytest.mark.parametrize("w", [0.7, 0.72, 0.8, 1.0, 1.5, 3.0])
    def test_zero_above_jump(self, w):
        assert sp.index_kappa(w) == 0

    @pytest.mark.parametrize("w", [JUMP, JUMP - 5e-4, JUMP + 9e-4])
    def test_boundary_band(self, w):
        with pytest.raises(BoundaryIndeterminate):
            sp.index_kappa(w)

    def test_jump_is_sign_change_of_re_g_at_mu0(self):
        # Im G = 0 for mu > 0 only at mu0, where Re G = (w - s(mu0)) / (w + s(mu0))
        for w in (0.3, 0.69, 0.71, 1.2):
            g = sp.g_of_mu(MU0, w)
            assert abs(g.imag) < 1e-13
            assert abs(g.real - (w - S_MU0) / (w + S_MU0)) < 1e-13


class TestFrequencies:
    def test_mu0(self):
        m = sp.mu0()
        assert 0.923 <= m <= 0.925
        assert abs(lambda0_real(m)) < 1e-10
        assert abs(m - MU0) < 1e-12
        assert 0.696 <= s(m) <= 0.698

    def test_critical(self):
        w_star, mu_star = sp.critical_point()
        assert 0.732 <= sp.critical_frequency() <= 0.734
        assert abs(w_star - OMEGA1_STAR) < 1e-9
        assert abs(mu_star - ARGMAX_MU) < 1e-5
        assert abs(mu_star - 0.799) < 5e-3

    def test_lower_bound_from_mu0(self):
        assert math.sqrt(s(MU0) ** 2 - lambda0_real(MU0) ** 2) <= sp.critical_frequency()

    def test_through_origin(self):
        assert abs(sp.through_origin_frequency() - S_MU0) < 1e-12


class TestRoots:
    @pytest.mark.parametrize("w", [0.0, 0.5])
    def test_values(self, w):
        pair = sp.y1_roots(w)
        assert abs(pair.mu1 - Y1_ROOTS[w][0]) < 1e-10
        assert abs(pair.mu2 - Y1_ROOTS[w][1]) < 1e-10
        assert abs(sp.y1(pair.mu1, w)) < 1e-12 and abs(sp.y1(pair.mu2, w)) < 1e-12

    def test_paper_values(self):
        p0, p5 = sp.y1_roots(0.0), sp.y1_roots(0.5)
        assert abs(p0.mu1 - 0.447) < 2e-3 and abs(p0.mu2 - 1.493) < 2e-3
        assert abs(p5.mu1 - 0.543) < 2e-3 and abs(p5.mu2 - 1.158) < 2e-3

    def test_double_root_at_paper_critical(self):
        pair = sp.y1_roots(0.733)
        assert pair.present and pair.mu2 - pair.mu1 < 2e-2
        assert abs(pair.mu1 - 0.799) < 5e-3

    def test_just_below_critical(self):
        pair = sp.y1_roots(0.732)
        assert pair.present and not pair.double and pair.mu1 < ARGMAX_MU < pair.mu2

    def test_absent(self):
        for w in (0.75, 1.0, 2.0):
            pair = sp.y1_roots(w)
            assert not pair.present and pair.mu1 is None and pair.mu2 is None

    @pytest.mark.parametrize("w", [0.3, 0.5, 0.69, 0.7, 0.72])
    def test_encirclement_criterion_matches_winding(self, w):
        assert sp.encircles_origin(w) == (sp.index_kappa(w) == 1)
