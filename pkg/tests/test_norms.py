import math

import numpy as np
import pytest

from moyal.atlas import Gaussian, Scaled
from moyal.errors import NontrivialSpace
from moyal.geometry import symplectic, zero_theta
from moyal.grids import make_grid
from moyal.logmath import log_factorial
from moyal.norms import (
    GSParams,
    Verdict,
    convergence_report,
    first_decreasing_index,
    gs_norm_estimate,
    merged_scales,
    schwartz_norm,
    tail_verdict,
    term_norm_bound,
)


class TestGSParams:
    @pytest.mark.parametrize("alpha, beta", [(0.2, 0.3), (0.0, 1.0), (1.0, 0.0), (0.4, 0.5)])
    def test_trivial_spaces(self, alpha, beta):
        with pytest.raises(NontrivialSpace):
            GSParams(alpha=alpha, beta=beta)

    @pytest.mark.parametrize("alpha, beta", [(0.5, 0.5), (0.0, 1.5), (1.5, 0.0), (2.0, 0.0)])
    def test_nontrivial_spaces(self, alpha, beta):
        assert GSParams(alpha=alpha, beta=beta).alpha == alpha

    def test_scales_must_be_positive(self):
        with pytest.raises(NontrivialSpace):
            GSParams(alpha=0.5, beta=0.5, A=0.0)


class TestNormEstimate:
    def test_zero_function(self, grid64):
        zero = Scaled(factor=0.0, inner=Gaussian(gamma=1.0, center=(0.0, 0.0)))
        assert gs_norm_estimate(zero, GSParams(alpha=0.5, beta=0.5, k_max=3), grid64) == -math.inf

    def test_one_dimensional_gaussian_is_stable(self):
        fn = Gaussian(gamma=1.0, center=(0.0,))
        coarse = gs_norm_estimate(fn, GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=12), make_grid(1, 128, 10.0))
        fine = gs_norm_estimate(fn, GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=16), make_grid(1, 256, 10.0))
        assert math.isfinite(coarse)
        assert math.exp(fine) == pytest.approx(math.exp(coarse), rel=0.01)

    def test_monotone_in_scales(self, grid64, gauss1):
        logs = np.array(
            [
                [gs_norm_estimate(gauss1, GSParams(alpha=0.5, beta=0.5, A=A, B=B, k_max=4), grid64) for B in (2.0, 4.0, 8.0)]
                for A in (1.5, 2.0, 4.0)
            ]
        )
        # larger A weakens the weight, larger B strengthens the derivative penalty
        assert np.all(np.diff(logs, axis=0) <= 1e-12)
        assert np.all(np.diff(logs, axis=1) <= 1e-12)

    def test_compact_support_weight(self, grid64, gauss1):
        inside = gs_norm_estimate(gauss1, GSParams(alpha=0.0, beta=1.5, A=1.0, B=2.0, k_max=0), grid64)
        assert inside == pytest.approx(0.0)

    def test_schwartz_norm_order_zero(self, grid64, gauss1):
        assert schwartz_norm(gauss1, 0, grid64) == pytest.approx(1.0)
        assert schwartz_norm(gauss1, 2, grid64) > 1.0


class TestTermBound:
    def test_zeroth_term(self):
        assert term_norm_bound(0, 0.5, 2.0, 3.0, 2.0, 1.7) == 1.7

    def test_formula(self):
        n, beta, B1, B2, size, log_c = 5, 0.5, 2.0, 3.0, 2.0, 0.3
        expected = log_c + n * math.log(B1 * B2 * math.exp(2 * beta) * size) + 2 * beta * n * math.log(n) - math.lgamma(n + 1)
        assert term_norm_bound(n, beta, B1, B2, size, log_c) == pytest.approx(expected)

    def test_zero_theta(self):
        assert term_norm_bound(3, 0.5, 1.0, 1.0, 0.0, 0.0) == -math.inf

    def _first_drop(self, beta, B1, B2, size):
        n = 0
        while term_norm_bound(n + 1, beta, B1, B2, size, 0.0) >= term_norm_bound(n, beta, B1, B2, size, 0.0):
            n += 1
        return n

    def test_first_decreasing_index_below_half(self):
        n = self._first_drop(0.4, 1.0, 1.0, 0.5)
        assert 0 < n < 1000
        assert first_decreasing_index(0.4, 1.0, 1.0, 0.5) == n

    def test_late_decrease_needs_larger_cap(self):
        # the bound keeps growing until n is near 10^5
        assert first_decreasing_index(0.4, 1.0, 1.0, 2.0) is None
        assert first_decreasing_index(0.4, 1.0, 1.0, 2.0, n_max=10**6) == self._first_drop(0.4, 1.0, 1.0, 2.0)

    def test_no_decrease_above_half(self):
        assert first_decreasing_index(0.6, 1.0, 1.0, 2.0, n_max=500) is None

    def test_factorial_dominates_at_beta_zero(self):
        bounds = [term_norm_bound(n, 0.0, 2.0, 2.0, 2.0, 0.0) for n in range(30)]
        assert bounds[-1] < bounds[0]
        assert bounds[-1] == pytest.approx(29 * math.log(8.0) - float(log_factorial(29)))


class TestScales:
    def test_merged_scales(self):
        A, B = merged_scales(1.0, 0.5, 2.0, 1.0, 2.0, 3.0)
        assert A == pytest.approx(1.0)
        assert B == pytest.approx(math.exp(0.5) * 4.0)

    def test_compact_support_takes_smaller_radius(self):
        assert merged_scales(0.0, 1.5, 2.0, 1.0, 3.0, 1.0)[0] == 2.0


class TestTailVerdict:
    def test_decreasing(self):
        assert tail_verdict([0.0, -1.0, -2.0, -3.0, -4.0, -5.0]) == Verdict.CONVERGING

    def test_increasing(self):
        assert tail_verdict([0.0, 1.0, 2.0, 3.0, 4.0, 5.0]) == Verdict.DIVERGING

    def test_vanishing_tail(self):
        assert tail_verdict([0.0] + [-math.inf] * 5) == Verdict.CONVERGING

    def test_odd_zeros_are_skipped(self):
        logs = [0.0, -math.inf, 1.0, -math.inf, 2.0, -math.inf, 3.0]
        assert tail_verdict(logs) == Verdict.DIVERGING

    def test_too_short(self):
        assert tail_verdict([0.0, 1.0]) == Verdict.INCONCLUSIVE

    def test_mixed(self):
        assert tail_verdict([0.0, 1.0, 2.0, 1.5, 3.0, 1.0]) == Verdict.INCONCLUSIVE


class TestConvergenceReport:
    def test_bump_series_converges_within_bound(self, bump):
        spec = make_grid(2, 64, 10.0)
        params = GSParams(alpha=2.0, beta=0.0, A=1.0, B=2.0, k_max=2)
        report = convergence_report(bump, bump, symplectic(1.0), params, spec, 20)
        assert len(report.rows) == 21
        assert report.all_within_bound
        assert report.verdict == Verdict.CONVERGING
        assert report.rows[0].u_value is not None

    def test_zero_theta(self, gauss1, grid64):
        params = GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=1)
        report = convergence_report(gauss1, gauss1, zero_theta(), params, grid64, 4)
        assert report.verdict == Verdict.CONVERGING
        assert report.u_verdict is None
        assert all(row.norm_estimate == -math.inf for row in report.rows[1:])

    def test_gaussian_u_column_diverges(self, gauss2, grid64):
        params = GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=1)
        report = convergence_report(gauss2, gauss2, symplectic(1.0), params, grid64, 6)
        assert report.u_verdict == Verdict.DIVERGING
        assert report.all_within_bound
        rows = report.csv_rows()
        assert list(rows[0]) == ["n", "u_re_log", "u_sign", "norm_log", "bound29_log", "ratio", "verdict"]
