import math

import numpy as np
import pytest

from moyal.atlas import Gaussian, HermiteGaussian
from moyal.divergence import (
    DivergenceVerdict,
    closed_form_ratio,
    divergence_report,
    dominator_log_c,
    prop1_closed_form,
    prop1_lower_bound,
    prop1_printed_form,
    prop2_dominator,
    u_functional,
    u_term,
)
from moyal.errors import DomainError, GridMismatch, SpaceMismatch, UnsupportedTheta
from moyal.geometry import symplectic
from moyal.grids import Space, make_grid, sample


class TestUFunctional:
    def test_gaussian_line_integral(self, gauss2):
        field = sample(gauss2, make_grid(2, 128, 10.0))
        assert u_functional(field) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-8)

    def test_odd_profile_integrates_to_zero(self):
        field = sample(HermiteGaussian(gamma=1.0, orders=(0, 1)), make_grid(2, 64, 8.0))
        assert abs(u_functional(field)) < 1e-12

    def test_needs_position_field(self, gauss1, grid64):
        with pytest.raises(SpaceMismatch):
            u_functional(sample(gauss1, grid64, Space.MOMENTUM))

    def test_needs_plane(self):
        with pytest.raises(GridMismatch):
            u_functional(sample(Gaussian(gamma=1.0, center=(0.0,)), make_grid(1, 32, 8.0)))


class TestSeriesTerms:
    def test_leading_terms(self, gauss2, standard_theta):
        assert u_term(gauss2, gauss2, standard_theta, 0).value() == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-8)
        assert u_term(gauss2, gauss2, standard_theta, 2).value() == pytest.approx(math.sqrt(math.pi), rel=1e-8)

    def test_even_terms_follow_closed_form(self, gauss2, standard_theta):
        for n in range(0, 11, 2):
            quadrature = u_term(gauss2, gauss2, standard_theta, n)
            assert quadrature.value() == pytest.approx(prop1_closed_form(2.0, n).value(), rel=5e-3)

    def test_odd_terms_vanish(self, gauss2, standard_theta):
        for n in range(1, 10, 2):
            assert u_term(gauss2, gauss2, standard_theta, n).sign == 0
            assert prop1_closed_form(2.0, n).sign == 0

    def test_grid_path_agrees(self, gauss1, standard_theta, grid64):
        fh = sample(gauss1, grid64, Space.MOMENTUM)
        on_grid = u_term(fh, fh, standard_theta, 2)
        factorised = u_term(gauss1, gauss1, standard_theta, 2)
        assert on_grid.value() == pytest.approx(factorised.value(), rel=1e-6)

    def test_other_theta_rejected(self, gauss1):
        with pytest.raises(UnsupportedTheta):
            u_term(gauss1, gauss1, symplectic(0.5), 2)


class TestClosedForms:
    def test_printed_form_values(self):
        assert prop1_printed_form(2.0, 2).value() == pytest.approx(15.952, rel=1e-4)
        assert prop1_printed_form(2.0, 4).value() == pytest.approx(math.sqrt(math.pi / 4) * 16 / 24 * 105**2)
        assert prop1_printed_form(2.0, 4).value() == pytest.approx(6513.8, rel=1e-4)

    def test_printed_form_disagrees_with_closed_form(self):
        assert prop1_printed_form(2.0, 2).value() / prop1_closed_form(2.0, 2).value() == pytest.approx(9.0)

    def test_lower_bound(self):
        assert prop1_lower_bound(2.0, 0) is None
        for n in range(2, 21, 2):
            assert prop1_closed_form(2.0, n).log >= prop1_lower_bound(2.0, n) - 1e-12

    def test_ratio(self):
        for n in range(0, 20, 2):
            ratio = math.exp(prop1_closed_form(3.0, n + 2).log - prop1_closed_form(3.0, n).log)
            assert ratio == pytest.approx(closed_form_ratio(3.0, n))
        assert closed_form_ratio(2.0, 2) == pytest.approx(3.0)


class TestReport:
    def test_diverges_above_one(self):
        report = divergence_report(2.0, 10)
        assert report.verdict == DivergenceVerdict.DIVERGES
        assert len(report.rows) == 11
        even = [row for row in report.rows if row.n % 2 == 0]
        assert all(row.relative_error < 5e-3 for row in even)
        assert all(row.above_lower_bound for row in even if row.n >= 2)
        assert all(row.relative_error is None for row in report.rows if row.n % 2 == 1)

    def test_hypothesis_not_met(self):
        assert divergence_report(0.1, 6).verdict == DivergenceVerdict.HYPOTHESIS_NOT_MET

    def test_inconclusive_when_too_short(self):
        assert divergence_report(2.0, 2).verdict == DivergenceVerdict.INCONCLUSIVE

    def test_csv_rows(self):
        rows = divergence_report(2.0, 4).csv_rows()
        assert rows[0]["lower_log10"] == ""
        assert rows[1]["rel_err"] == ""
        assert rows[2]["u_log10"] == pytest.approx(math.log10(math.sqrt(math.pi)), rel=1e-6)


class TestGaussianDominator:
    def test_half_needs_no_amplitude(self):
        assert dominator_log_c(0.5, 3.0) == 0.0

    def test_amplitude_positive_above_half(self):
        assert dominator_log_c(1.0, 0.25) > 0.0

    @pytest.mark.parametrize("beta, gamma", [(0.5, 4.0), (1.0, 1.0), (2.0, 0.5)])
    def test_margin(self, beta, gamma):
        dominator = prop2_dominator(beta, gamma)
        assert dominator.min_log_margin >= 0.0
        p = np.linspace(-20.0, 20.0, 401)[:, None]
        assert np.all(dominator.profile.fourier_values(p).real >= np.exp(-p[:, 0] ** 2 / (4 * gamma)) * (1 - 1e-9))

    def test_dominated_series_terms(self, standard_theta):
        gamma = 4.0
        f = prop2_dominator(0.5, gamma).tensor()
        g = Gaussian(gamma=gamma, center=(0.0, 0.0))
        for n in (0, 2, 4):
            lower = u_term(g, g, standard_theta, n).value() * (gamma / math.pi) ** 2
            assert u_term(f, f, standard_theta, n).value() >= lower * (1 - 1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            prop2_dominator(0.25, 1.0)
        with pytest.raises(DomainError):
            prop2_dominator(1.0, 0.0)
