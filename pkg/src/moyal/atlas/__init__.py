from moyal.atlas.appendix import AppendixGHat
from moyal.atlas.base import (
    AnalyticFunction,
    DerivativeMethod,
    DerivativeResult,
    evaluate,
    evaluate_derivative,
    evaluate_fourier,
    unit,
)
from moyal.atlas.bracket import poisson_bracket
from moyal.atlas.bump import BumpFourier
from moyal.atlas.combinators import PointwiseProduct, Scaled, Sum, TensorProduct, Translated, leibniz
from moyal.atlas.descriptors import from_descriptor, to_descriptor
from moyal.atlas.gaussian import Gaussian, HermiteGaussian, gaussian_self_product

__all__ = [
    "AnalyticFunction",
    "AppendixGHat",
    "BumpFourier",
    "DerivativeMethod",
    "DerivativeResult",
    "Gaussian",
    "HermiteGaussian",
    "PointwiseProduct",
    "Scaled",
    "Sum",
    "TensorProduct",
    "Translated",
    "evaluate",
    "evaluate_derivative",
    "evaluate_fourier",
    "from_descriptor",
    "gaussian_self_product",
    "leibniz",
    "poisson_bracket",
    "to_descriptor",
    "unit",
]
