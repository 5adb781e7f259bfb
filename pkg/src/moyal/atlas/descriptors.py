"""JSON descriptors {family, d, params} for atlas functions.

Examples::

    {"family": "gaussian", "d": 2, "params": {"gamma": 1.0, "center": [0, 0]}}
    {"family": "bump_fourier", "d": 2, "params": {"radius": 2.0}}
    {"family": "translated", "d": 2, "params": {"shift": [1, 0], "inner": {...}}}
"""

import logging
from typing import Any, Callable

import voluptuous as vol

from moyal.atlas.appendix import AppendixGHat
from moyal.atlas.base import AnalyticFunction
from moyal.atlas.bump import BumpFourier
from moyal.atlas.combinators import PointwiseProduct, Scaled, Sum, TensorProduct, Translated
from moyal.atlas.gaussian import Gaussian, HermiteGaussian
from moyal.errors import DescriptorInvalid, MoyalError

_LOGGER = logging.getLogger(__name__)

_positive = vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False))
_vector = [vol.Coerce(float)]

DESCRIPTOR_SCHEMA = vol.Schema(
    {
        vol.Required("family"): str,
        vol.Required("d"): vol.All(int, vol.Range(min=1)),
        vol.Optional("params", default={}): dict,
    }
)

PARAM_SCHEMAS: dict[str, vol.Schema] = {
    Gaussian.family: vol.Schema({vol.Required("gamma"): _positive, vol.Optional("center"): _vector}),
    HermiteGaussian.family: vol.Schema(
        {vol.Required("gamma"): _positive, vol.Required("orders"): [vol.All(int, vol.Range(min=0))]}
    ),
    BumpFourier.family: vol.Schema({vol.Required("radius"): _positive, vol.Optional("sharpness", default=1.0): _positive}),
    AppendixGHat.family: vol.Schema(
        {
            vol.Required("beta"): _positive,
            vol.Optional("amplitude", default=1.0): vol.Coerce(float),
            vol.Optional("dilation", default=1.0): _positive,
        }
    ),
    Scaled.family: vol.Schema({vol.Required("factor"): vol.Coerce(float), vol.Required("inner"): dict}),
    Translated.family: vol.Schema({vol.Required("shift"): _vector, vol.Required("inner"): dict}),
    Sum.family: vol.Schema({vol.Required("terms"): vol.All([dict], vol.Length(min=1))}),
    PointwiseProduct.family: vol.Schema({vol.Required("left"): dict, vol.Required("right"): dict}),
    TensorProduct.family: vol.Schema({vol.Required("parts"): vol.All([dict], vol.Length(min=1))}),
}


def _gaussian(d: int, params: dict) -> AnalyticFunction:
    return Gaussian(gamma=params["gamma"], center=tuple(params.get("center", [0.0] * d)))


def _hermite(d: int, params: dict) -> AnalyticFunction:
    return HermiteGaussian(gamma=params["gamma"], orders=tuple(params["orders"]))


def _bump(d: int, params: dict) -> AnalyticFunction:
    return BumpFourier(radius=params["radius"], dim=d, sharpness=params["sharpness"])


def _appendix(d: int, params: dict) -> AnalyticFunction:
    return AppendixGHat(**params)


def _scaled(d: int, params: dict) -> AnalyticFunction:
    return Scaled(factor=params["factor"], inner=from_descriptor(params["inner"]))


def _translated(d: int, params: dict) -> AnalyticFunction:
    return Translated(shift=tuple(params["shift"]), inner=from_descriptor(params["inner"]))


def _sum(d: int, params: dict) -> AnalyticFunction:
    return Sum(terms=[from_descriptor(term) for term in params["terms"]])


def _product(d: int, params: dict) -> AnalyticFunction:
    return PointwiseProduct(left=from_descriptor(params["left"]), right=from_descriptor(params["right"]))


def _tensor(d: int, params: dict) -> AnalyticFunction:
    return TensorProduct(parts=[from_descriptor(part) for part in params["parts"]])


BUILDERS: dict[str, Callable[[int, dict], AnalyticFunction]] = {
    Gaussian.family: _gaussian,
    HermiteGaussian.family: _hermite,
    BumpFourier.family: _bump,
    AppendixGHat.family: _appendix,
    Scaled.family: _scaled,
    Translated.family: _translated,
    Sum.family: _sum,
    PointwiseProduct.family: _product,
    TensorProduct.family: _tensor,
}


def from_descriptor(descriptor: Any) -> AnalyticFunction:
    try:
        data = DESCRIPTOR_SCHEMA(descriptor)
        family = data["family"]
        if family not in BUILDERS:
            raise DescriptorInvalid(f"unknown function family '{family}', expected one of {sorted(BUILDERS)}")
        params = PARAM_SCHEMAS[family](data["params"])
        fn = BUILDERS[family](data["d"], params)
    except vol.Invalid as err:
        raise DescriptorInvalid(f"invalid function descriptor: {err}") from err
    except MoyalError:
        raise
    except ValueError as err:
        raise DescriptorInvalid(f"invalid function parameters: {err}") from err
    if fn.d != data["d"]:
        raise DescriptorInvalid(f"descriptor declares d={data['d']} but {family} has d={fn.d}")
    _LOGGER.debug("Built %s from descriptor", family)
    return fn


def to_descriptor(fn: AnalyticFunction) -> dict:
    return fn.describe()
