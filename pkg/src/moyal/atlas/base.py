import logging
from typing import ClassVar, Sequence

import numpy as np
from pydantic import BaseModel, Field

from moyal.const import K_CAP
from moyal.errors import DerivativeUnavailable, DimensionMismatch, TransformUnavailable

_LOGGER = logging.getLogger(__name__)


class DerivativeMethod:
    CLOSED_FORM = "closed-form"
    SPECTRAL = "spectral-quadrature"


class AnalyticFunction(BaseModel):
    """A test function with evaluation, Fourier transform and derivatives.

    Points are arrays whose trailing axis has length ``d``.
    """

    family: ClassVar[str] = "abstract"

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False
        copy_on_model_validation = "none"

    @property
    def d(self) -> int:
        raise NotImplementedError

    @property
    def closed_form_derivatives(self) -> bool:
        return False

    @property
    def band_limit(self) -> float | None:
        """Radius outside which the Fourier transform vanishes identically, if any."""
        return None

    def values(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def fourier_values(self, p: np.ndarray) -> np.ndarray:
        raise TransformUnavailable(f"{self.family} has no Fourier transform available")

    def derivative_values(self, kappa: Sequence[int], x: np.ndarray) -> np.ndarray:
        raise DerivativeUnavailable(f"{self.family} has no derivatives available")

    def factors(self) -> list["AnalyticFunction"]:
        raise TransformUnavailable(f"{self.family} is not a tensor product of 1-D factors")

    def describe(self) -> dict:
        raise NotImplementedError

    @property
    def derivative_method(self) -> str:
        return DerivativeMethod.CLOSED_FORM if self.closed_form_derivatives else DerivativeMethod.SPECTRAL

    def check_points(self, x) -> np.ndarray:
        arr = np.asarray(x, dtype=float)
        if arr.ndim == 0 or arr.shape[-1] != self.d:
            raise DimensionMismatch(f"{self.family} expects points of length {self.d}, got shape {arr.shape}")
        return arr

    def check_kappa(self, kappa: Sequence[int]) -> tuple[int, ...]:
        kappa = tuple(int(k) for k in kappa)
        if len(kappa) != self.d or any(k < 0 for k in kappa):
            raise DimensionMismatch(f"multi-index {kappa} does not fit d={self.d}")
        return kappa


class DerivativeResult(BaseModel):
    value: complex = Field(description="Value of ∂^κ f at the point.")
    method: str = Field(description="closed-form or spectral-quadrature.")

    class Config:
        arbitrary_types_allowed = True


def evaluate(fn: AnalyticFunction, x) -> complex:
    return complex(fn.values(fn.check_points(x)))


def evaluate_fourier(fn: AnalyticFunction, p) -> complex:
    return complex(fn.fourier_values(fn.check_points(p)))


def evaluate_derivative(fn: AnalyticFunction, kappa: Sequence[int], x, k_cap: int = K_CAP) -> DerivativeResult:
    kappa = fn.check_kappa(kappa)
    if sum(kappa) > k_cap:
        raise DerivativeUnavailable(f"derivative order {sum(kappa)} exceeds the cap {k_cap}")
    value = fn.derivative_values(kappa, fn.check_points(x))
    return DerivativeResult(value=complex(value), method=fn.derivative_method)


def unit(d: int, axis: int, order: int = 1) -> tuple[int, ...]:
    return tuple(order if i == axis else 0 for i in range(d))
