"""Centered-grid DFTs with the convention f̂(p) = ∫ f(x) e^{−i⟨p,x⟩} dx.

With x = 0 at index n/2 and n divisible by four, the Riemann sum
Δx^d Σ_j f(x_j) e^{−i p_k x_j} equals Δx^d · fftshift(fftn(ifftshift(f))).
"""

import logging
from enum import Enum
from typing import Sequence

import numpy as np
from scipy import fft as sp_fft

from moyal.const import TAIL_BAND_FRACTION, TAIL_THRESHOLD, get_threads
from moyal.errors import AliasRisk, DimensionMismatch, SpaceMismatch
from moyal.grids.spec import GridSpec, SampledField, Space

_LOGGER = logging.getLogger(__name__)


class NormKind(str, Enum):
    SUP = "sup"
    L2 = "L2"
    L1 = "L1"


def forward_array(data: np.ndarray, spec: GridSpec) -> np.ndarray:
    out = sp_fft.fftn(sp_fft.ifftshift(data), workers=get_threads())
    return sp_fft.fftshift(out) * spec.dx**spec.d


def inverse_array(data: np.ndarray, spec: GridSpec) -> np.ndarray:
    out = sp_fft.ifftn(sp_fft.ifftshift(data), workers=get_threads())
    return sp_fft.fftshift(out) / spec.dx**spec.d


def dft_forward(field: SampledField) -> SampledField:
    if field.space != Space.POSITION:
        raise SpaceMismatch("dft_forward expects a position-space field")
    return SampledField(spec=field.spec, space=Space.MOMENTUM, data=forward_array(field.data, field.spec))


def dft_inverse(field: SampledField) -> SampledField:
    if field.space != Space.MOMENTUM:
        raise SpaceMismatch("dft_inverse expects a momentum-space field")
    return SampledField(spec=field.spec, space=Space.POSITION, data=inverse_array(field.data, field.spec))


def momentum_monomial(spec: GridSpec, kappa: Sequence[int]) -> np.ndarray:
    """(ip)^κ on the momentum nodes."""
    if len(kappa) != spec.d:
        raise DimensionMismatch(f"multi-index {tuple(kappa)} does not match d={spec.d}")
    axis = spec.axis(Space.MOMENTUM)
    factors = [(1j * axis) ** k for k in kappa]
    out = factors[0]
    for factor in factors[1:]:
        out = np.multiply.outer(out, factor)
    return np.asarray(out, dtype=complex).reshape(spec.shape)


def tail_band(spec: GridSpec) -> np.ndarray:
    """Boolean mask of momentum nodes within the outer band of the grid."""
    cutoff = (1.0 - TAIL_BAND_FRACTION) * spec.P
    nodes = spec.nodes(Space.MOMENTUM)
    return np.any(np.abs(nodes) >= cutoff, axis=-1)


def tail_fraction(momentum: np.ndarray, spec: GridSpec) -> float:
    total = float(np.sum(np.abs(momentum)))
    if total == 0.0:
        return 0.0
    return float(np.sum(np.abs(momentum[tail_band(spec)]))) / total


def check_tail(momentum: np.ndarray, spec: GridSpec, what: str = "field") -> float:
    fraction = tail_fraction(momentum, spec)
    if fraction >= TAIL_THRESHOLD:
        raise AliasRisk(
            f"{what} carries {fraction:.3e} of its spectral mass in the outer momentum band "
            f"(threshold {TAIL_THRESHOLD:g}); enlarge n or shrink L"
        )
    return fraction


def multiply_spectrum(momentum: SampledField, kappa: Sequence[int]) -> SampledField:
    """Momentum samples of ∂^κ f given momentum samples of f."""
    if momentum.space != Space.MOMENTUM:
        raise SpaceMismatch("expected a momentum-space field")
    return momentum.with_data(momentum.data * momentum_monomial(momentum.spec, kappa))


def spectral_derivative(field: SampledField, kappa: Sequence[int]) -> SampledField:
    if field.space != Space.POSITION:
        raise SpaceMismatch("spectral_derivative expects a position-space field")
    if not any(kappa):
        return field
    weighted = multiply_spectrum(dft_forward(field), kappa)
    check_tail(weighted.data, field.spec, f"∂^{tuple(kappa)} of the field")
    return dft_inverse(weighted)


def field_norm(field: SampledField, kind: NormKind | str = NormKind.SUP) -> float:
    kind = NormKind(kind)
    magnitude = np.abs(field.data)
    if kind == NormKind.SUP:
        return float(magnitude.max(initial=0.0))
    measure = field.spec.measure(field.space)
    if kind == NormKind.L1:
        return float(np.sum(magnitude) * measure)
    return float(np.sqrt(np.sum(magnitude**2) * measure))


def relative_l2(a: SampledField, b: SampledField) -> float:
    denominator = field_norm(b, NormKind.L2)
    return field_norm(a - b, NormKind.L2) / denominator if denominator else field_norm(a - b, NormKind.L2)
