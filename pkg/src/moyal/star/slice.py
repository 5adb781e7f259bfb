"""Independent quadratures of the twisted product at single points."""

import logging
import math

import numpy as np

from moyal.atlas import AnalyticFunction
from moyal.const import ALT_FORM_CHUNK, SLICE_HALF_WIDTH, SLICE_NODES
from moyal.errors import DimensionMismatch, UnsupportedTheta
from moyal.geometry import ThetaMatrix, invert_theta, scaled_determinant, symplectic
from moyal.grids import GridSpec, Space, make_grid

_LOGGER = logging.getLogger(__name__)


def _line_rule() -> tuple[np.ndarray, np.ndarray]:
    t = np.linspace(-SLICE_HALF_WIDTH, SLICE_HALF_WIDTH, SLICE_NODES)
    w = np.full(t.shape, t[1] - t[0])
    w[0] = w[-1] = 0.5 * w[0]
    return t, w


def separable_slice(
    f1: AnalyticFunction,
    f2: AnalyticFunction,
    g1: AnalyticFunction,
    g2: AnalyticFunction,
    x1: float,
    theta: ThetaMatrix | None = None,
) -> complex:
    """(f×g)(x₁, 0) for f = f₁⊗f₂, g = g₁⊗g₂ and θ = t·(0 1; −1 0), by two 1-D quadratures.

    With s = t/2:
    (f×g)(x₁,0) = 1/(4π²|s|) ∫ f̂₁(z) g₂(−sz) e^{ix₁z} dz · ∫ f₂(y) ĝ₁(y/s) e^{ix₁y/s} dy.
    """
    theta = symplectic() if theta is None else theta
    t = theta.symplectic_scale()
    if t is None or t == 0.0:
        raise UnsupportedTheta("separable slices need d=2 and a non-zero symplectic theta")
    for part in (f1, f2, g1, g2):
        if part.d != 1:
            raise DimensionMismatch(f"separable slices take 1-D factors, got d={part.d}")
    s = 0.5 * t
    nodes, weights = _line_rule()
    points = nodes[:, None]
    first = np.sum(weights * f1.fourier_values(points) * g2.values(-s * points) * np.exp(1j * x1 * nodes))
    second = np.sum(weights * f2.values(points) * g1.fourier_values(points / s) * np.exp(1j * x1 * nodes / s))
    return complex(first * second / (4.0 * math.pi**2 * abs(s)))


def value_at_origin(f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, spec: GridSpec | None = None) -> complex:
    """(f×g)(0) = (2π)^{−d} |det θ/2|^{−1} ∫ f(y) ĝ(−(θ/2)^{−1} y) dy on a position grid."""
    spec = make_grid(theta.d) if spec is None else spec
    inverse = invert_theta(theta)
    y = spec.nodes(Space.POSITION).reshape(-1, spec.d)
    integrand = f.values(y) * g.fourier_values(-y @ inverse.T)
    total = np.sum(integrand) * spec.measure(Space.POSITION)
    return complex(total / ((2.0 * math.pi) ** spec.d * scaled_determinant(theta)))


def twisted_product_alt_form(
    f: AnalyticFunction,
    g: AnalyticFunction,
    theta: ThetaMatrix,
    points: np.ndarray,
    spec: GridSpec | None = None,
) -> np.ndarray:
    """(f×g)(x) = |det M|/(2π)^d ∫∫ f(y)g(z) e^{i[x·M(z−y) + z·My]} dy dz, M = (θ/2)^{−1}.

    The kernel e^{iz·My} does not depend on x, so it is built once per y-chunk and
    applied to every requested point.
    """
    spec = make_grid(theta.d, 64, 8.0) if spec is None else spec
    m = invert_theta(theta)
    points = np.atleast_2d(np.asarray(points, dtype=float))
    nodes = spec.nodes(Space.POSITION).reshape(-1, spec.d)
    fy = f.values(nodes)
    gz = g.values(nodes)
    # x·My per (point, node)
    x_m = points @ m
    ez = gz[None, :] * np.exp(1j * x_m @ nodes.T)
    ey = fy[None, :] * np.exp(-1j * x_m @ nodes.T)
    z_m = nodes @ m
    out = np.zeros(points.shape[0], dtype=complex)
    for start in range(0, nodes.shape[0], ALT_FORM_CHUNK):
        block = slice(start, start + ALT_FORM_CHUNK)
        # e^{i z·My} for y in the block: z·My = (zᵀM)·y
        kernel = np.exp(1j * nodes[block] @ z_m.T)
        out += np.sum(ey[:, block] * (ez @ kernel.T), axis=1)
    prefactor = abs(np.linalg.det(m)) / (2.0 * math.pi) ** spec.d * spec.measure(Space.POSITION) ** 2
    return prefactor * out
