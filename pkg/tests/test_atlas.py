import math

import numpy as np
import pytest
from scipy.integrate import quad

from moyal.atlas import (
    AppendixGHat,
    BumpFourier,
    DerivativeResult,
    Gaussian,
    HermiteGaussian,
    Scaled,
    Sum,
    TensorProduct,
    Translated,
    evaluate,
    evaluate_derivative,
    evaluate_fourier,
    from_descriptor,
    poisson_bracket,
    to_descriptor,
)
from moyal.atlas.bump import bump_profile
from moyal.errors import DerivativeUnavailable, DescriptorInvalid, DimensionMismatch
from moyal.geometry import symplectic
from moyal.witness import build_g_hat, build_omega, moment_lower_bound_check


def _central_difference(fn, axis, x, h=1e-5):
    step = np.zeros_like(x)
    step[axis] = h
    return (evaluate(fn, x + step) - evaluate(fn, x - step)) / (2 * h)


class TestGaussian:
    def test_transform_matches_quadrature(self):
        fn = Gaussian(gamma=1.5, center=(0.4,))
        p = 1.3
        re, _ = quad(lambda x: math.exp(-1.5 * (x - 0.4) ** 2) * math.cos(p * x), -20, 20)
        im, _ = quad(lambda x: -math.exp(-1.5 * (x - 0.4) ** 2) * math.sin(p * x), -20, 20)
        assert evaluate_fourier(fn, [p]) == pytest.approx(complex(re, im), rel=1e-10)

    def test_derivative_matches_difference_quotient(self, rng):
        fn = Gaussian(gamma=1.0, center=(0.3, -0.2))
        for x in rng.uniform(-1.5, 1.5, size=(5, 2)):
            for axis, kappa in ((0, (1, 0)), (1, (0, 1))):
                exact = evaluate_derivative(fn, kappa, x)
                assert exact.method == "closed-form"
                assert exact.value == pytest.approx(_central_difference(fn, axis, x), abs=1e-8)

    def test_high_order_derivative_is_finite(self):
        fn = Gaussian(gamma=1.0, center=(0.0,))
        value = evaluate_derivative(fn, (40,), [0.0]).value
        # ∂⁴⁰e^{−x²} at 0 is (−1)^20 40!/20!
        assert value.real == pytest.approx(math.factorial(40) / math.factorial(20), rel=1e-10)

    def test_derivative_cap(self):
        with pytest.raises(DerivativeUnavailable):
            evaluate_derivative(Gaussian(gamma=1.0, center=(0.0,)), (41,), [0.0])

    def test_derivative_result_holds_complex(self):
        result = evaluate_derivative(Gaussian(gamma=1.0, center=(0.3, 0.1)), (1, 0), [0.3, 0.1])
        assert isinstance(result, DerivativeResult)
        assert isinstance(result.value, complex)
        assert DerivativeResult(value=1 + 2j, method="closed-form").value == 1 + 2j

    def test_rejects_bad_gamma(self):
        with pytest.raises(ValueError):
            Gaussian(gamma=0.0, center=(0.0,))

    def test_point_dimension(self):
        with pytest.raises(DimensionMismatch):
            evaluate(Gaussian(gamma=1.0, center=(0.0, 0.0)), [0.0, 0.0, 0.0])


class TestHermiteGaussian:
    def test_odd_in_second_axis(self, rng):
        fn = HermiteGaussian(gamma=1.0, orders=(0, 1))
        x = rng.uniform(-2, 2, size=(10, 2))
        mirrored = x * np.array([1.0, -1.0])
        np.testing.assert_allclose(fn.values(mirrored), -fn.values(x), atol=1e-14)

    def test_transform_matches_quadrature(self):
        fn = HermiteGaussian(gamma=1.0, orders=(2,))
        p = 0.8
        re, _ = quad(lambda x: fn.values(np.array([[x]]))[0].real * math.cos(p * x), -20, 20)
        assert evaluate_fourier(fn, [p]) == pytest.approx(complex(re, 0.0), rel=1e-9, abs=1e-12)


class TestBump:
    def test_value_at_origin(self):
        fn = BumpFourier(radius=2.0)
        radial, _ = quad(lambda rho: rho * bump_profile(np.array(rho)), 0, 1)
        expected = 2.0 * math.pi * 4.0 * radial / (2.0 * math.pi) ** 2
        assert evaluate(fn, [0.0, 0.0]).real == pytest.approx(expected, rel=1e-10)

    def test_spectrum_vanishes_outside_radius(self):
        fn = BumpFourier(radius=2.0)
        assert fn.band_limit == 2.0
        assert evaluate_fourier(fn, [2.0, 0.1]) == 0.0
        assert evaluate_fourier(fn, [0.0, 0.0]) == pytest.approx(1.0)

    def test_radial_symmetry(self):
        fn = BumpFourier(radius=2.0)
        assert evaluate(fn, [0.6, 0.8]) == pytest.approx(evaluate(fn, [1.0, 0.0]), rel=1e-12)


class TestCombinators:
    def test_tensor_transform_factorises(self):
        a = Gaussian(gamma=1.0, center=(0.2,))
        b = HermiteGaussian(gamma=2.0, orders=(1,))
        fn = TensorProduct(parts=[a, b])
        p = np.array([0.7, -1.1])
        expected = evaluate_fourier(a, p[:1]) * evaluate_fourier(b, p[1:])
        assert evaluate_fourier(fn, p) == pytest.approx(expected)
        assert fn.factors() == [a, b]

    def test_translation_phase(self):
        inner = Gaussian(gamma=1.0, center=(0.0, 0.0))
        moved = Translated(shift=(1.0, -0.5), inner=inner)
        p = np.array([0.3, 0.9])
        expected = evaluate_fourier(inner, p) * np.exp(-1j * p @ np.array([1.0, -0.5]))
        assert evaluate_fourier(moved, p) == pytest.approx(expected)
        assert evaluate(moved, [1.0, -0.5]) == pytest.approx(1.0)

    def test_sum_and_scale(self):
        g = Gaussian(gamma=1.0, center=(0.0,))
        fn = Sum(terms=[g, Scaled(factor=-2.0, inner=g)])
        assert evaluate(fn, [0.5]) == pytest.approx(-evaluate(g, [0.5]))


class TestDescriptors:
    @pytest.mark.parametrize(
        "descriptor",
        [
            {"family": "gaussian", "d": 2, "params": {"gamma": 1.0, "center": [0.5, 0.0]}},
            {"family": "hermite_gaussian", "d": 2, "params": {"gamma": 1.0, "orders": [0, 1]}},
            {"family": "bump_fourier", "d": 2, "params": {"radius": 2.0}},
            {"family": "appendix_ghat", "d": 1, "params": {"beta": 2.0}},
        ],
    )
    def test_descriptor_reproduces_function(self, descriptor):
        fn = from_descriptor(descriptor)
        assert from_descriptor(to_descriptor(fn)) == fn
        assert fn.d == descriptor["d"]

    def test_nested_descriptor(self):
        fn = from_descriptor(
            {
                "family": "translated",
                "d": 2,
                "params": {"shift": [1.0, 0.0], "inner": {"family": "gaussian", "d": 2, "params": {"gamma": 1.0}}},
            }
        )
        assert evaluate(fn, [1.0, 0.0]) == pytest.approx(1.0)

    @pytest.mark.parametrize(
        "descriptor",
        [
            {"family": "nope", "d": 2},
            {"family": "gaussian", "d": 2, "params": {"gamma": -1.0}},
            {"family": "gaussian", "d": 3, "params": {"gamma": 1.0, "center": [0.0, 0.0]}},
            {"d": 2},
        ],
    )
    def test_invalid_descriptor(self, descriptor):
        with pytest.raises(DescriptorInvalid):
            from_descriptor(descriptor)


class TestPoissonBracket:
    def test_matches_hand_contraction(self):
        f = Gaussian(gamma=1.0, center=(0.3, 0.0))
        g = Gaussian(gamma=2.0, center=(0.0, 0.2))
        x = np.array([0.1, -0.4])
        d1f = evaluate_derivative(f, (1, 0), x).value
        d2f = evaluate_derivative(f, (0, 1), x).value
        d1g = evaluate_derivative(g, (1, 0), x).value
        d2g = evaluate_derivative(g, (0, 1), x).value
        expected = 0.5 * (d1f * d2g - d2f * d1g)
        assert poisson_bracket(f, g, symplectic(0.5), x) == pytest.approx(expected)

    def test_antisymmetric(self):
        f = Gaussian(gamma=1.0, center=(0.3, 0.0))
        g = Gaussian(gamma=2.0, center=(0.0, 0.2))
        x = np.array([0.1, -0.4])
        theta = symplectic(1.0)
        assert poisson_bracket(f, g, theta, x) == pytest.approx(-poisson_bracket(g, f, theta, x))


class TestAppendixGHat:
    def test_value_at_origin_is_zeroth_moment(self):
        omega = build_omega(2.0)
        report = moment_lower_bound_check(build_g_hat(2.0, omega), [0])
        zeroth = math.exp(report.rows[0].moment.log)
        assert evaluate(AppendixGHat(beta=2.0), [0.0]).real == pytest.approx(zeroth, rel=1e-3)

    def test_even(self):
        fn = AppendixGHat(beta=2.0)
        assert evaluate(fn, [1.3]) == pytest.approx(evaluate(fn, [-1.3]), rel=1e-12)
