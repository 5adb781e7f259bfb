"""Sampling atlas functions and their derivatives on grids.

Band-limited functions are sampled in position space as the inverse DFT of their
exact momentum samples, which keeps every derivative field consistent with the
momentum data used by the star-product algorithms.
"""

import json
import logging
import threading
from collections import OrderedDict
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from moyal.atlas.base import AnalyticFunction, DerivativeMethod
from moyal.const import SAMPLE_CACHE_MAX, TAIL_BAND_FRACTION
from moyal.errors import DimensionMismatch, TransformUnavailable
from moyal.grids.spec import GridSpec, SampledField, Space
from moyal.grids.transforms import check_tail, inverse_array, momentum_monomial, spectral_derivative

_LOGGER = logging.getLogger(__name__)

_CACHE: OrderedDict[tuple, np.ndarray] = OrderedDict()
_CACHE_LOCK = threading.Lock()


def _key(fn: AnalyticFunction) -> str:
    return json.dumps(fn.describe(), sort_keys=True)


def _cached(key: tuple, build) -> np.ndarray:
    """Least-recently-used store of read-only sample arrays, at most SAMPLE_CACHE_MAX entries."""
    with _CACHE_LOCK:
        if key in _CACHE:
            _CACHE.move_to_end(key)
            return _CACHE[key]
    data = np.asarray(build(), dtype=complex)
    data.flags.writeable = False
    with _CACHE_LOCK:
        data = _CACHE.setdefault(key, data)
        _CACHE.move_to_end(key)
        while len(_CACHE) > SAMPLE_CACHE_MAX:
            _CACHE.popitem(last=False)
        return data


def cache_size() -> int:
    with _CACHE_LOCK:
        return len(_CACHE)


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def _check_dimension(fn: AnalyticFunction, spec: GridSpec) -> None:
    if fn.d != spec.d:
        raise DimensionMismatch(f"cannot sample a d={fn.d} function on a d={spec.d} grid")


def resolved_on(fn: AnalyticFunction, spec: GridSpec) -> bool:
    """True when fn's spectrum vanishes on the outer momentum band of spec."""
    limit = fn.band_limit
    return limit is not None and limit < (1.0 - TAIL_BAND_FRACTION) * spec.P


def _momentum_data(fn: AnalyticFunction, spec: GridSpec) -> np.ndarray:
    return _cached((_key(fn), spec, Space.MOMENTUM), lambda: fn.fourier_values(spec.nodes(Space.MOMENTUM)))


def sample(fn: AnalyticFunction, spec: GridSpec, space: Space | str = Space.POSITION) -> SampledField:
    _check_dimension(fn, spec)
    space = Space(space)
    if space == Space.MOMENTUM:
        return SampledField(spec=spec, space=space, data=_momentum_data(fn, spec))
    if resolved_on(fn, spec):
        data = _cached((_key(fn), spec, Space.POSITION), lambda: inverse_array(_momentum_data(fn, spec), spec))
    else:
        data = _cached((_key(fn), spec, Space.POSITION), lambda: fn.values(spec.nodes(Space.POSITION)))
    return SampledField(spec=spec, space=space, data=data)


class SampledDerivative(BaseModel):
    field: SampledField = Field(description="Samples of ∂^κ f in position space.")
    method: str = Field(description="closed-form or spectral-quadrature.")


def sample_derivative(fn: AnalyticFunction, kappa: Sequence[int], spec: GridSpec) -> SampledDerivative:
    _check_dimension(fn, spec)
    kappa = fn.check_kappa(kappa)
    if fn.closed_form_derivatives and not resolved_on(fn, spec):
        data = _cached((_key(fn), spec, kappa), lambda: fn.derivative_values(kappa, spec.nodes(Space.POSITION)))
        return SampledDerivative(
            field=SampledField(spec=spec, space=Space.POSITION, data=data), method=DerivativeMethod.CLOSED_FORM
        )
    if not any(kappa):
        return SampledDerivative(field=sample(fn, spec), method=fn.derivative_method)
    try:
        spectrum = _momentum_data(fn, spec)
    except TransformUnavailable:
        _LOGGER.debug("No transform for %s, differentiating position samples", fn.family)
        return SampledDerivative(field=spectral_derivative(sample(fn, spec), kappa), method=DerivativeMethod.SPECTRAL)

    def build():
        weighted = spectrum * momentum_monomial(spec, kappa)
        check_tail(weighted, spec, f"∂^{kappa} of {fn.family}")
        return inverse_array(weighted, spec)

    data = _cached((_key(fn), spec, kappa), build)
    return SampledDerivative(field=SampledField(spec=spec, space=Space.POSITION, data=data), method=DerivativeMethod.SPECTRAL)
