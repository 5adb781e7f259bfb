from moyal.star.base import StarAlgorithm, momentum_samples, position_samples
from moyal.star.config import Algorithm, StarConfig
from moyal.star.convolution import (
    MomentumSeriesReport,
    fourier_tail_estimate,
    involution,
    momentum_partial_sum,
    twisted_convolution,
)
from moyal.star.product import twisted_product
from moyal.star.series import (
    TermPair,
    coordinate_commutator,
    moyal_partial_sum,
    moyal_term,
    moyal_term_derivative,
    term_pairs,
    term_prefactor,
)
from moyal.star.slice import separable_slice, twisted_product_alt_form, value_at_origin
from moyal.star.toolkit import StarToolkit

__all__ = [
    "Algorithm",
    "MomentumSeriesReport",
    "StarAlgorithm",
    "StarConfig",
    "StarToolkit",
    "TermPair",
    "coordinate_commutator",
    "fourier_tail_estimate",
    "involution",
    "momentum_partial_sum",
    "momentum_samples",
    "moyal_partial_sum",
    "moyal_term",
    "moyal_term_derivative",
    "position_samples",
    "separable_slice",
    "term_pairs",
    "term_prefactor",
    "twisted_convolution",
    "twisted_product",
    "twisted_product_alt_form",
    "value_at_origin",
]
