import math

import numpy as np
import pytest
from scipy.integrate import quad

from moyal.atlas import Gaussian, gaussian_self_product
from moyal.errors import (
    DimensionMismatch,
    GridMismatch,
    MemoryGuard,
    ThetaSingular,
    TransformUnavailable,
    UnsupportedTheta,
)
from moyal.geometry import degenerate, make_theta, symplectic, zero_theta
from moyal.grids import Space, dft_forward, field_norm, make_grid, relative_l2, sample
from moyal.star import (
    Algorithm,
    StarConfig,
    StarToolkit,
    involution,
    separable_slice,
    twisted_convolution,
    twisted_product,
    twisted_product_alt_form,
    value_at_origin,
)


def _exact_self_product(spec, gamma=1.0, t=1.0):
    return gaussian_self_product(gamma, t, spec.nodes())


def _product(f, g, theta, spec, algorithm):
    return twisted_product(f, g, theta, StarConfig(algorithm=algorithm, spec=spec))


@pytest.fixture
def offset_gaussians():
    return (
        Gaussian(gamma=1.0, center=(0.5, 0.0)),
        Gaussian(gamma=1.0, center=(0.0, -0.5)),
        Gaussian(gamma=1.0, center=(-0.3, 0.3)),
    )


class TestGaussianSelfProduct:
    @pytest.mark.parametrize("algorithm", [Algorithm.SHIFT, Algorithm.TENSOR])
    def test_momentum_algorithms(self, algorithm, gauss1, grid64, standard_theta):
        field = _product(gauss1, gauss1, standard_theta, grid64, algorithm)
        exact = field.with_data(_exact_self_product(grid64))
        assert relative_l2(field, exact) < 1e-8

    def test_direct_quadrature(self, gauss1, standard_theta):
        spec = make_grid(2, 32, 8.0)
        field = _product(gauss1, gauss1, standard_theta, spec, Algorithm.DIRECT)
        exact = field.with_data(_exact_self_product(spec))
        assert relative_l2(field, exact) < 1e-6

    def test_scaled_theta(self, gauss2):
        spec = make_grid(2, 64, 6.0)
        field = _product(gauss2, gauss2, symplectic(0.5), spec, Algorithm.SHIFT)
        exact = field.with_data(gaussian_self_product(2.0, 0.5, spec.nodes()))
        assert relative_l2(field, exact) < 1e-8

    def test_value_at_origin(self, gauss1, standard_theta):
        assert value_at_origin(gauss1, gauss1, standard_theta) == pytest.approx(0.5, rel=1e-8)

    def test_alt_form_at_points(self, gauss1, standard_theta):
        points = np.array([[0.0, 0.0], [0.5, -0.3], [1.0, 1.0]])
        values = twisted_product_alt_form(gauss1, gauss1, standard_theta, points)
        np.testing.assert_allclose(values, gaussian_self_product(1.0, 1.0, points), atol=1e-6)


class TestAlgebra:
    def test_algorithms_agree_on_offset_gaussians(self, offset_gaussians, grid64, standard_theta):
        f, g, _ = offset_gaussians
        shift = _product(f, g, standard_theta, grid64, Algorithm.SHIFT)
        tensor = _product(f, g, standard_theta, grid64, Algorithm.TENSOR)
        assert relative_l2(tensor, shift) < 1e-8

    def test_zero_theta_is_pointwise(self, offset_gaussians, grid64):
        f, g, _ = offset_gaussians
        field = _product(f, g, zero_theta(), grid64, Algorithm.SHIFT)
        pointwise = sample(f, grid64).data * sample(g, grid64).data
        assert np.max(np.abs(field.data - pointwise)) < 1e-10

    def test_non_commutative(self, offset_gaussians, grid64, standard_theta):
        f, g, _ = offset_gaussians
        fg = _product(f, g, standard_theta, grid64, Algorithm.SHIFT)
        gf = _product(g, f, standard_theta, grid64, Algorithm.SHIFT)
        assert relative_l2(fg, gf) > 1e-2

    def test_associative(self, offset_gaussians, grid64, standard_theta):
        f, g, h = offset_gaussians
        fg = _product(f, g, standard_theta, grid64, Algorithm.TENSOR)
        gh = _product(g, h, standard_theta, grid64, Algorithm.TENSOR)
        left = _product(fg, h, standard_theta, grid64, Algorithm.TENSOR)
        right = _product(f, gh, standard_theta, grid64, Algorithm.TENSOR)
        assert relative_l2(left, right) < 1e-6

    def test_involution_reverses_order(self, offset_gaussians, grid64, standard_theta):
        f, g, _ = offset_gaussians
        fh, gh = sample(f, grid64, Space.MOMENTUM), sample(g, grid64, Space.MOMENTUM)
        left = involution(twisted_convolution(fh, gh, standard_theta))
        right = twisted_convolution(involution(gh), involution(fh), standard_theta)
        assert relative_l2(left, right) < 1e-9

    def test_transform_of_product_is_twisted_convolution(self, offset_gaussians, grid64, standard_theta):
        f, g, _ = offset_gaussians
        product = dft_forward(_product(f, g, standard_theta, grid64, Algorithm.SHIFT))
        convolution = twisted_convolution(
            sample(f, grid64, Space.MOMENTUM), sample(g, grid64, Space.MOMENTUM), standard_theta
        ).scale(1.0 / (2.0 * math.pi) ** 2)
        assert relative_l2(product, convolution) < 1e-6


class TestSeparableSlice:
    @pytest.mark.parametrize("x1", [0.0, 0.5, 1.2])
    def test_gaussian_slice(self, x1):
        h = Gaussian(gamma=1.0, center=(0.0,))
        value = separable_slice(h, h, h, h, x1, symplectic(1.0))
        assert value == pytest.approx(gaussian_self_product(1.0, 1.0, np.array([x1, 0.0])), rel=1e-8)

    def test_square_identity_at_unit_shift(self):
        # θ/2 = 1: both one-dimensional integrals equal ∫ h ĥ e^{i x₁ t} dt for even h
        h = Gaussian(gamma=1.0, center=(0.0,))
        x1 = 0.7
        line, _ = quad(lambda t: math.exp(-t * t) * math.sqrt(math.pi) * math.exp(-t * t / 4) * math.cos(x1 * t), -30, 30)
        value = separable_slice(h, h, h, h, x1, symplectic(2.0))
        assert value == pytest.approx(line**2 / (4 * math.pi**2), rel=1e-8)

    def test_matches_grid_row(self, gauss1, grid64, standard_theta):
        field = _product(gauss1, gauss1, standard_theta, grid64, Algorithm.SHIFT)
        h = Gaussian(gamma=1.0, center=(0.0,))
        o = grid64.origin_index
        axis = grid64.axis()
        for index in range(o - 8, o + 9, 4):
            value = separable_slice(h, h, h, h, axis[index], standard_theta)
            assert field.data[index, o] == pytest.approx(value, abs=1e-8)

    def test_rejects_zero_theta(self):
        h = Gaussian(gamma=1.0, center=(0.0,))
        with pytest.raises(UnsupportedTheta):
            separable_slice(h, h, h, h, 0.0, zero_theta())

    def test_rejects_two_dimensional_factors(self, gauss1):
        h = Gaussian(gamma=1.0, center=(0.0,))
        with pytest.raises(DimensionMismatch):
            separable_slice(gauss1, h, h, h, 0.0)


class TestAlgorithmErrors:
    def test_tensor_memory_guard(self, gauss1, standard_theta):
        with pytest.raises(MemoryGuard):
            _product(gauss1, gauss1, standard_theta, make_grid(2, 128, 10.0), Algorithm.TENSOR)

    def test_shift_needs_atlas_g(self, gauss1, grid64, standard_theta):
        g = sample(gauss1, grid64)
        with pytest.raises(TransformUnavailable):
            _product(gauss1, g, standard_theta, grid64, Algorithm.SHIFT)

    @pytest.mark.parametrize("theta", [zero_theta(), degenerate()])
    def test_direct_needs_invertible_theta(self, theta, gauss1):
        with pytest.raises(ThetaSingular):
            _product(gauss1, gauss1, theta, make_grid(2, 16, 8.0), Algorithm.DIRECT)

    def test_direct_is_two_dimensional(self):
        block = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
        theta = make_theta(4, block)
        f = Gaussian(gamma=1.0, center=(0.0,) * 4)
        with pytest.raises(UnsupportedTheta):
            _product(f, f, theta, make_grid(4, 8, 4.0), Algorithm.DIRECT)

    def test_dimension_mismatch(self, grid64, standard_theta):
        f = Gaussian(gamma=1.0, center=(0.0,))
        with pytest.raises(DimensionMismatch):
            _product(f, f, standard_theta, grid64, Algorithm.SHIFT)

    def test_field_on_other_grid(self, gauss1, grid64, standard_theta):
        elsewhere = sample(gauss1, make_grid(2, 32, 8.0))
        with pytest.raises(GridMismatch):
            _product(elsewhere, gauss1, standard_theta, grid64, Algorithm.SHIFT)

    def test_toolkit_names(self, grid64):
        toolkit = StarToolkit(StarConfig(spec=grid64))
        assert [a.name for a in toolkit.get_algorithms()] == ["tensor", "shift", "direct"]
        assert toolkit.get_algorithm().name == "shift"
        assert toolkit.get_algorithm("direct").name == "direct"

    def test_result_is_position_field(self, gauss1, grid64, standard_theta):
        field = _product(gauss1, gauss1, standard_theta, grid64, Algorithm.SHIFT)
        assert field.space == Space.POSITION
        assert field_norm(field) == pytest.approx(0.5, rel=1e-8)
