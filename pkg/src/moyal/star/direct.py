"""Double quadrature of (f×g)(x) = |det M|/(2π)^d ∫∫ f(y) g(z) e^{i(x−y)·M(z−x)} dy dz, M = (θ/2)^{−1}.

|det| is taken of the scaled operator θ/2, the normalisation under which this
integral agrees with the momentum-side algorithms. For d = 2 the z-integral
G(w) = Σ_z g(z) e^{iw·Mz} factorises into two matrix products because M has zero
diagonal, and (f×g)(x) = |det M|/(2π)² Σ_y f(y) e^{iy·Mx} G(x − y).
"""

import logging
from typing import ClassVar

import numpy as np

from moyal.atlas import AnalyticFunction
from moyal.const import DIRECT_REFINE
from moyal.errors import UnsupportedTheta
from moyal.geometry import ThetaMatrix, invert_theta
from moyal.grids import GridSpec, SampledField, Space, make_grid
from moyal.star.base import Operand, StarAlgorithm, position_samples

_LOGGER = logging.getLogger(__name__)


class DirectQuadrature(StarAlgorithm):
    name: ClassVar[str] = "direct"
    description: ClassVar[str] = "Brute double position-space quadrature of the invertible-θ integral form."

    refine: int = DIRECT_REFINE

    def quadrature_grid(self, f: Operand, g: Operand, spec: GridSpec) -> tuple[GridSpec, int]:
        if isinstance(f, AnalyticFunction) and isinstance(g, AnalyticFunction):
            return make_grid(spec.d, spec.n * self.refine, spec.L), self.refine
        return spec, 1

    def _run(self, f: Operand, g: Operand, theta: ThetaMatrix, spec: GridSpec) -> SampledField:
        m = invert_theta(theta)
        if spec.d != 2:
            raise UnsupportedTheta(f"direct quadrature is implemented for d=2, got d={spec.d}")
        quad, stride = self.quadrature_grid(f, g, spec)
        _LOGGER.debug("Direct quadrature on n=%d with output stride %d", quad.n, stride)
        fy = position_samples(f, quad).data
        gz = position_samples(g, quad).data
        h = quad.dx
        nq = quad.n
        axis = quad.axis(Space.POSITION)

        # w = x − y on the lattice of spacing h, index offset nq − 1
        w = (np.arange(2 * nq - 1) - (nq - 1)) * h
        # w·Mz = w1 m12 z2 + w2 m21 z1
        left = np.exp(1j * m[0, 1] * np.outer(w, axis))
        right = np.exp(1j * m[1, 0] * np.outer(w, axis))
        big_g = left @ gz.T @ right.T
        big_g = big_g * h**2

        out_index = np.arange(spec.n) * stride
        x_axis = axis[out_index]
        prefactor = abs(np.linalg.det(m)) / (2.0 * np.pi) ** 2 * h**2
        y_index = np.arange(nq)
        result = np.empty(spec.shape, dtype=complex)
        for a, ia in enumerate(out_index):
            x1 = x_axis[a]
            # G(x − y) for all x2 on the output grid and all y
            rows = big_g[ia - y_index + nq - 1]
            window = rows[:, (out_index[:, None] - y_index[None, :] + nq - 1)]
            # y·Mx = m12 y1 x2 + m21 y2 x1
            phase = np.exp(
                1j * (m[0, 1] * axis[:, None, None] * x_axis[None, :, None] + m[1, 0] * axis[None, None, :] * x1)
            )
            result[a] = prefactor * np.einsum("ij,ikj,ikj->k", fy, window, phase)
        return SampledField(spec=spec, space=Space.POSITION, data=result)
