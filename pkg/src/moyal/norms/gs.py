"""Grid estimates of the Gelfand-Shilov norms

    ‖f‖ = sup_{x,κ} e^{|x/A|^{1/α}} |∂^κ f(x)| / (B^{|κ|} κ^{βκ}),

taken over grid nodes and |κ| ≤ K_max, and the term bound of the absolutely
convergent regime. Every estimate is a lower bound of the true sup.
"""

import itertools
import logging
import math
from typing import Callable, Iterator, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field, root_validator

from moyal.atlas import AnalyticFunction
from moyal.errors import NontrivialSpace
from moyal.grids import GridSpec, SampledField, Space, sample_derivative, spectral_derivative
from moyal.logmath import log_abs, log_factorial, log_multi_power, xlogx

_LOGGER = logging.getLogger(__name__)

DerivativeSource = Callable[[tuple[int, ...]], np.ndarray]


class GSParams(BaseModel):
    alpha: float = Field(description="Decay index α ≥ 0; α = 0 means support in |x| ≤ A.")
    beta: float = Field(description="Smoothness index β ≥ 0.")
    A: float = Field(1.0, description="Decay scale A > 0.")
    B: float = Field(1.0, description="Derivative scale B > 0.")
    k_max: int = Field(8, description="Largest |κ| in the sup.")

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _nontrivial(cls, values):
        alpha, beta = values["alpha"], values["beta"]
        if alpha < 0 or beta < 0 or values["k_max"] < 0:
            raise NontrivialSpace(f"indices must be non-negative, got alpha={alpha}, beta={beta}, k_max={values['k_max']}")
        if values["A"] <= 0 or values["B"] <= 0:
            raise NontrivialSpace(f"A and B must be positive, got A={values['A']}, B={values['B']}")
        trivial = alpha + beta < 1 or (alpha == 0 and beta <= 1) or (beta == 0 and alpha <= 1)
        if trivial:
            raise NontrivialSpace(f"the space with alpha={alpha}, beta={beta} contains only zero")
        return values

    def with_scales(self, A: float, B: float, k_max: int | None = None) -> "GSParams":
        return GSParams(alpha=self.alpha, beta=self.beta, A=A, B=B, k_max=self.k_max if k_max is None else k_max)


def multi_indices(d: int, k_max: int) -> Iterator[tuple[int, ...]]:
    for total in range(k_max + 1):
        for kappa in itertools.product(range(total + 1), repeat=d):
            if sum(kappa) == total:
                yield kappa


def derivative_source(fn: Union[AnalyticFunction, SampledField], spec: GridSpec) -> DerivativeSource:
    if isinstance(fn, SampledField):
        return lambda kappa: spectral_derivative(fn, kappa).data
    return lambda kappa: sample_derivative(fn, kappa, spec).field.data


class DerivativeTable(BaseModel):
    """log|∂^κ f| on the grid for every |κ| ≤ k_max, reusable across (A, B)."""

    spec: GridSpec = Field(description="Grid of the samples.")
    k_max: int = Field(description="Largest derivative order stored.")
    logs: dict[tuple[int, ...], np.ndarray] = Field(description="log|∂^κ f| per multi-index.")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @classmethod
    def build(cls, source: DerivativeSource, spec: GridSpec, k_max: int) -> "DerivativeTable":
        logs = {kappa: log_abs(source(kappa)) for kappa in multi_indices(spec.d, k_max)}
        return cls(spec=spec, k_max=k_max, logs=logs)

    def log_norm(self, params: GSParams) -> float:
        radius = self.spec.radius(Space.POSITION)
        if params.alpha == 0:
            weight = np.where(radius <= params.A, 0.0, -np.inf)
        else:
            weight = (radius / params.A) ** (1.0 / params.alpha)
        best = -math.inf
        for kappa, values in self.logs.items():
            if sum(kappa) > params.k_max:
                continue
            penalty = sum(kappa) * math.log(params.B) + log_multi_power(kappa, params.beta)
            best = max(best, float(np.max(values + weight)) - penalty)
        return best


def gs_norm_estimate(fn: Union[AnalyticFunction, SampledField], params: GSParams, spec: GridSpec) -> float:
    """log of the grid estimate; −inf for the zero function."""
    table = DerivativeTable.build(derivative_source(fn, spec), spec, params.k_max)
    return table.log_norm(params)


def term_norm_bound(n: int, beta: float, B1: float, B2: float, theta_abs: float, log_c: float) -> float:
    """log[C (B₁B₂e^{2β}θ_abs)^n n^{2βn} / n!] with 0^0 = 1."""
    if n == 0:
        return log_c
    if theta_abs == 0:
        return -math.inf
    base = math.log(B1) + math.log(B2) + 2.0 * beta + math.log(theta_abs)
    return log_c + n * base + 2.0 * beta * xlogx(n) - float(log_factorial(n))


def first_decreasing_index(beta: float, B1: float, B2: float, theta_abs: float, log_c: float = 0.0, n_max: int = 1000) -> int | None:
    """Smallest n with bound(n+1) < bound(n), or None within n_max."""
    previous = term_norm_bound(0, beta, B1, B2, theta_abs, log_c)
    for n in range(n_max):
        current = term_norm_bound(n + 1, beta, B1, B2, theta_abs, log_c)
        if current < previous:
            return n
        previous = current
    return None


def schwartz_norm(fn: Union[AnalyticFunction, SampledField], order: int, spec: GridSpec) -> float:
    """max over grid nodes and |κ| ≤ N of (1+|x|)^N |∂^κ f(x)|."""
    source = derivative_source(fn, spec)
    weight = (1.0 + spec.radius(Space.POSITION)) ** order
    return max(float(np.max(weight * np.abs(source(kappa)))) for kappa in multi_indices(spec.d, order))
