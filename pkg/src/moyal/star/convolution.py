"""Twisted convolution (f̂⊛ĝ)(p) = ∫ f̂(q) ĝ(p−q) e^{i⟨p,θq⟩} dq on momentum grids.

p − q falls on the same momentum lattice, so ĝ(p − q) is read from a zero-padded
copy of ĝ; values beyond the grid count as zero, which requires both spectra to
carry negligible mass in the outer band.
"""

import logging
import math
from typing import Callable

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import gammaln

from moyal.const import SHIFT_DROP_RELATIVE, TAIL_THRESHOLD
from moyal.errors import SpaceMismatch, TailMass
from moyal.geometry import ThetaMatrix, pair
from moyal.grids import SampledField, Space, require_same_grid
from moyal.grids.transforms import tail_fraction

_LOGGER = logging.getLogger(__name__)

PhaseKernel = Callable[[np.ndarray], np.ndarray]


def _exact_kernel(angle: np.ndarray) -> np.ndarray:
    return np.exp(1j * angle)


def truncated_kernel(order: int) -> PhaseKernel:
    """Σ_{n≤N} (ia)^n/n!, the momentum-side Moyal partial sum of e^{ia}."""

    def kernel(angle: np.ndarray) -> np.ndarray:
        total = np.zeros(angle.shape, dtype=complex)
        term = np.ones(angle.shape, dtype=complex)
        for n in range(order + 1):
            total += term
            term = term * 1j * angle / (n + 1)
        return total

    return kernel


def _check_inputs(fh: SampledField, gh: SampledField) -> None:
    if fh.space != Space.MOMENTUM or gh.space != Space.MOMENTUM:
        raise SpaceMismatch("twisted convolution takes momentum-space fields")
    require_same_grid(fh, gh)
    for name, field in (("f̂", fh), ("ĝ", gh)):
        fraction = tail_fraction(field.data, field.spec)
        if fraction >= TAIL_THRESHOLD:
            raise TailMass(
                f"{name} carries {fraction:.3e} of its mass in the outer momentum band; "
                "values beyond the grid would not be negligible"
            )


def _convolve(fh: SampledField, gh: SampledField, theta: ThetaMatrix, kernel: PhaseKernel) -> np.ndarray:
    spec = fh.spec
    n, d = spec.n, spec.d
    padded = np.zeros((3 * n,) * d, dtype=complex)
    padded[(slice(n, 2 * n),) * d] = gh.data
    p = spec.nodes(Space.MOMENTUM)
    flat_f = fh.data.reshape(-1)
    keep = np.flatnonzero(np.abs(flat_f) >= SHIFT_DROP_RELATIVE * np.abs(flat_f).max(initial=0.0))
    result = np.zeros(spec.shape, dtype=complex)
    for flat in keep:
        j = np.unravel_index(flat, spec.shape)
        q = p[j]
        window = padded[tuple(slice(3 * n // 2 - jk, 3 * n // 2 - jk + n) for jk in j)]
        result += flat_f[flat] * window * kernel(pair(theta, p, q))
    return result * spec.dp**d


def twisted_convolution(fh: SampledField, gh: SampledField, theta: ThetaMatrix) -> SampledField:
    _check_inputs(fh, gh)
    return fh.with_data(_convolve(fh, gh, theta, _exact_kernel))


def involution(field: SampledField) -> SampledField:
    """F*(p) = conj F(−p) on the grid."""
    axes = tuple(range(field.spec.d))
    reflected = np.roll(np.flip(field.data, axis=axes), 1, axis=axes)
    return field.with_data(np.conj(reflected))


class MomentumSeriesReport(BaseModel):
    order: int = Field(description="Highest series order N kept.")
    radius: float = Field(description="Radius of the compact momentum set |p| ≤ radius.")
    sup_error: float = Field(description="sup over the set of |S_N − (2π)^{−d} f̂⊛ĝ|.")
    tail_estimate: float = Field(description="Bound (2π)^{−d}Σ|f̂||ĝ| |a|^{N+1}e^{|a|}/(N+1)! on the set.")

    @property
    def within_estimate(self) -> bool:
        return self.sup_error <= self.tail_estimate * (1.0 + 1e-9) + 1e-15


def momentum_partial_sum(fh: SampledField, gh: SampledField, theta: ThetaMatrix, order: int) -> SampledField:
    """Momentum-side partial sum Σ_{n≤N} of the transformed Moyal series, (2π)^{−d} included."""
    _check_inputs(fh, gh)
    data = _convolve(fh, gh, theta, truncated_kernel(order))
    return fh.with_data(data / (2.0 * math.pi) ** fh.spec.d)


def fourier_tail_estimate(
    fh: SampledField, gh: SampledField, theta: ThetaMatrix, order: int, radius: float
) -> MomentumSeriesReport:
    _check_inputs(fh, gh)
    spec = fh.spec
    norm = (2.0 * math.pi) ** spec.d
    log_tail = -float(gammaln(order + 2.0))

    def tail_kernel(angle: np.ndarray) -> np.ndarray:
        a = np.abs(angle)
        with np.errstate(divide="ignore"):
            return np.exp((order + 1) * np.log(a) + a + log_tail)

    magnitude_f = fh.with_data(np.abs(fh.data))
    magnitude_g = gh.with_data(np.abs(gh.data))
    bound = np.real(_convolve(magnitude_f, magnitude_g, theta, tail_kernel)) / norm
    exact = _convolve(fh, gh, theta, _exact_kernel) / norm
    partial = _convolve(fh, gh, theta, truncated_kernel(order)) / norm
    inside = np.linalg.norm(spec.nodes(Space.MOMENTUM), axis=-1) <= radius
    report = MomentumSeriesReport(
        order=order,
        radius=radius,
        sup_error=float(np.max(np.abs(partial - exact)[inside], initial=0.0)),
        tail_estimate=float(np.max(bound[inside], initial=0.0)),
    )
    _LOGGER.debug("Momentum partial sum N=%d: error %.3e, estimate %.3e", order, report.sup_error, report.tail_estimate)
    return report
