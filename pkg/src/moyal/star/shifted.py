import logging
from typing import ClassVar

import numpy as np

from moyal.atlas import AnalyticFunction
from moyal.const import SHIFT_DROP_RELATIVE
from moyal.errors import TransformUnavailable
from moyal.geometry import ThetaMatrix, apply_theta
from moyal.grids import GridSpec, SampledField, Space
from moyal.star.base import Operand, StarAlgorithm, momentum_samples

_LOGGER = logging.getLogger(__name__)

_CHUNK = 32


class ShiftedQuadrature(StarAlgorithm):
    """(f×g)(x) = (2π)^{−d} Σ_q Δq^d f̂(q) e^{iq·x} g(x + θq/2), the p-integral done in closed form."""

    name: ClassVar[str] = "shift"
    description: ClassVar[str] = "Momentum quadrature over q with g evaluated exactly at shifted points."

    def _run(self, f: Operand, g: Operand, theta: ThetaMatrix, spec: GridSpec) -> SampledField:
        if not isinstance(g, AnalyticFunction):
            raise TransformUnavailable("the shift algorithm evaluates g off-grid and needs an atlas function")
        fh = momentum_samples(f, spec).data.reshape(-1)
        q = spec.nodes(Space.MOMENTUM).reshape(-1, spec.d)
        keep = np.abs(fh) >= SHIFT_DROP_RELATIVE * np.abs(fh).max(initial=0.0)
        fh, q = fh[keep], q[keep]
        _LOGGER.debug("Shift quadrature keeps %d of %d momentum nodes", fh.size, keep.size)

        x = spec.nodes(Space.POSITION).reshape(-1, spec.d)
        shifts = apply_theta(theta, q)
        weight = (spec.dp / (2.0 * np.pi)) ** spec.d
        result = np.zeros(x.shape[0], dtype=complex)
        for start in range(0, fh.size, _CHUNK):
            block = slice(start, start + _CHUNK)
            points = x[None, :, :] + shifts[block, None, :]
            plane = np.exp(1j * q[block] @ x.T)
            result += weight * np.sum(fh[block, None] * plane * g.values(points), axis=0)
        return SampledField(spec=spec, space=Space.POSITION, data=result.reshape(spec.shape))
