"""Momentum tensor f̂(q)ĝ(p), phase e^{−i⟨q,θp⟩}, inverse DFT in (q,p), diagonal x_q = x_p.

The 2d-dimensional tensor is processed in slabs of fixed first q-coordinate; for
each slab the p-transform is a batched inverse DFT and the q-sum is accumulated in
index order, so the result does not depend on slab scheduling.
"""

import logging
from typing import ClassVar

import numpy as np
from scipy import fft as sp_fft

from moyal.const import TENSOR_MAX_N, get_threads
from moyal.errors import MemoryGuard
from moyal.geometry import ThetaMatrix, apply_theta
from moyal.grids import GridSpec, SampledField, Space
from moyal.star.base import Operand, StarAlgorithm, momentum_samples

_LOGGER = logging.getLogger(__name__)


class TensorPhaseIFFT(StarAlgorithm):
    name: ClassVar[str] = "tensor"
    description: ClassVar[str] = "Phase-twisted momentum tensor with a 2d-dimensional inverse DFT, restricted to the diagonal."

    def _run(self, f: Operand, g: Operand, theta: ThetaMatrix, spec: GridSpec) -> SampledField:
        if spec.n > TENSOR_MAX_N:
            raise MemoryGuard(
                f"tensor algorithm holds (n^d)^2 values; n={spec.n} exceeds the cap {TENSOR_MAX_N}"
            )
        fh = momentum_samples(f, spec).data
        gh = momentum_samples(g, spec).data
        d = spec.d
        p = spec.nodes(Space.MOMENTUM)
        x = spec.nodes(Space.POSITION)
        # ⟨q,θp⟩ = q·(θp/2)
        theta_p = apply_theta(theta, p)
        weight = (spec.dp / (2.0 * np.pi)) ** d
        axes = tuple(range(1, d + 1))
        result = np.zeros(spec.shape, dtype=complex)

        for i in range(spec.n):
            q = p[i]
            slab_f = fh[i]
            # phase[rest, p] for every q sharing first index i
            phase = np.exp(-1j * np.einsum("...k,pk->...p", q, theta_p.reshape(-1, d)))
            tensor = slab_f.reshape(-1, 1) * phase * gh.reshape(1, -1)
            tensor = tensor.reshape((-1,) + spec.shape)
            inner = sp_fft.fftshift(
                sp_fft.ifftn(sp_fft.ifftshift(tensor, axes=axes), axes=axes, workers=get_threads()),
                axes=axes,
            ) / spec.dx**d
            # q-sum restricted to the diagonal: Σ_q Δq^d/(2π)^d f̂(q) e^{iq·x} G_q(x)
            plane = np.exp(1j * np.einsum("qk,...k->q...", q.reshape(-1, d), x))
            result += weight * np.sum(plane * inner, axis=0)
        return SampledField(spec=spec, space=Space.POSITION, data=result)
