"""Closed algebra over AnalyticFunction: scaling, translation, sums, products, tensor products."""

import itertools
from typing import ClassVar, Sequence

import numpy as np
from pydantic import Field, root_validator
from scipy.special import comb

from moyal.atlas.base import AnalyticFunction
from moyal.errors import DimensionMismatch, TransformUnavailable


class Scaled(AnalyticFunction):
    family: ClassVar[str] = "scaled"

    factor: float = Field(description="Constant c in c·f.")
    inner: AnalyticFunction = Field(description="Function being scaled.")

    @property
    def d(self) -> int:
        return self.inner.d

    @property
    def closed_form_derivatives(self) -> bool:
        return self.inner.closed_form_derivatives

    @property
    def band_limit(self):
        return self.inner.band_limit

    def values(self, x):
        return self.factor * self.inner.values(x)

    def fourier_values(self, p):
        return self.factor * self.inner.fourier_values(p)

    def derivative_values(self, kappa, x):
        return self.factor * self.inner.derivative_values(kappa, x)

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"factor": self.factor, "inner": self.inner.describe()}}


class Translated(AnalyticFunction):
    """f(x − a)"""

    family: ClassVar[str] = "translated"

    shift: tuple[float, ...] = Field(description="Translation a.")
    inner: AnalyticFunction = Field(description="Function being translated.")

    @root_validator(skip_on_failure=True)
    def _same_dimension(cls, values):
        if len(values["shift"]) != values["inner"].d:
            raise DimensionMismatch(f"shift {values['shift']} does not match d={values['inner'].d}")
        return values

    @property
    def d(self) -> int:
        return self.inner.d

    @property
    def closed_form_derivatives(self) -> bool:
        return self.inner.closed_form_derivatives

    @property
    def band_limit(self):
        return self.inner.band_limit

    def values(self, x):
        return self.inner.values(x - np.asarray(self.shift))

    def fourier_values(self, p):
        p = np.asarray(p, dtype=float)
        return np.exp(-1j * (p @ np.asarray(self.shift))) * self.inner.fourier_values(p)

    def derivative_values(self, kappa, x):
        return self.inner.derivative_values(kappa, x - np.asarray(self.shift))

    def factors(self):
        return [Translated(shift=(a,), inner=fn) for a, fn in zip(self.shift, self.inner.factors())]

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"shift": list(self.shift), "inner": self.inner.describe()}}


class Sum(AnalyticFunction):
    family: ClassVar[str] = "sum"

    terms: list[AnalyticFunction] = Field(description="Summands, all of the same dimension.")

    @root_validator(skip_on_failure=True)
    def _same_dimension(cls, values):
        terms = values["terms"]
        if not terms:
            raise ValueError("Sum needs at least one term")
        dims = {term.d for term in terms}
        if len(dims) != 1:
            raise DimensionMismatch(f"Sum terms have mixed dimensions {sorted(dims)}")
        return values

    @property
    def d(self) -> int:
        return self.terms[0].d

    @property
    def closed_form_derivatives(self) -> bool:
        return all(term.closed_form_derivatives for term in self.terms)

    @property
    def band_limit(self):
        limits = [term.band_limit for term in self.terms]
        return None if any(limit is None for limit in limits) else max(limits)

    def values(self, x):
        return sum(term.values(x) for term in self.terms)

    def fourier_values(self, p):
        return sum(term.fourier_values(p) for term in self.terms)

    def derivative_values(self, kappa, x):
        return sum(term.derivative_values(kappa, x) for term in self.terms)

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"terms": [term.describe() for term in self.terms]}}


def leibniz(kappa: Sequence[int]):
    """Yields (λ, C(κ,λ)) over all λ ≤ κ."""
    for lam in itertools.product(*(range(k + 1) for k in kappa)):
        weight = 1.0
        for k, j in zip(kappa, lam):
            weight *= comb(k, j, exact=True)
        yield lam, weight


class PointwiseProduct(AnalyticFunction):
    family: ClassVar[str] = "pointwise_product"

    left: AnalyticFunction = Field(description="First factor.")
    right: AnalyticFunction = Field(description="Second factor.")

    @root_validator(skip_on_failure=True)
    def _same_dimension(cls, values):
        if values["left"].d != values["right"].d:
            raise DimensionMismatch(f"product factors have d={values['left'].d} and d={values['right'].d}")
        return values

    @property
    def d(self) -> int:
        return self.left.d

    @property
    def closed_form_derivatives(self) -> bool:
        return self.left.closed_form_derivatives and self.right.closed_form_derivatives

    def values(self, x):
        return self.left.values(x) * self.right.values(x)

    def fourier_values(self, p):
        raise TransformUnavailable("pointwise products have no closed-form Fourier transform")

    def derivative_values(self, kappa, x):
        total = 0.0
        for lam, weight in leibniz(kappa):
            rest = tuple(k - j for k, j in zip(kappa, lam))
            total = total + weight * self.left.derivative_values(lam, x) * self.right.derivative_values(rest, x)
        return total

    def describe(self) -> dict:
        return {
            "family": self.family,
            "d": self.d,
            "params": {"left": self.left.describe(), "right": self.right.describe()},
        }


class TensorProduct(AnalyticFunction):
    """(f₁⊗…⊗f_k)(x) = Π f_i(x restricted to the i-th block of axes)."""

    family: ClassVar[str] = "tensor_product"

    parts: list[AnalyticFunction] = Field(description="Factors; d is the sum of their dimensions.")

    @root_validator(skip_on_failure=True)
    def _non_empty(cls, values):
        if not values["parts"]:
            raise ValueError("TensorProduct needs at least one factor")
        return values

    @property
    def d(self) -> int:
        return sum(part.d for part in self.parts)

    @property
    def closed_form_derivatives(self) -> bool:
        return all(part.closed_form_derivatives for part in self.parts)

    @property
    def band_limit(self):
        limits = [part.band_limit for part in self.parts]
        if any(limit is None for limit in limits):
            return None
        return float(np.sqrt(sum(limit**2 for limit in limits)))

    def _blocks(self):
        start = 0
        for part in self.parts:
            yield part, slice(start, start + part.d)
            start += part.d

    def values(self, x):
        out = np.ones(x.shape[:-1], dtype=complex)
        for part, block in self._blocks():
            out = out * part.values(x[..., block])
        return out

    def fourier_values(self, p):
        p = np.asarray(p, dtype=float)
        out = np.ones(p.shape[:-1], dtype=complex)
        for part, block in self._blocks():
            out = out * part.fourier_values(p[..., block])
        return out

    def derivative_values(self, kappa, x):
        out = np.ones(x.shape[:-1], dtype=complex)
        for part, block in self._blocks():
            out = out * part.derivative_values(tuple(kappa[block]), x[..., block])
        return out

    def factors(self):
        return [factor for part in self.parts for factor in part.factors()]

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"parts": [part.describe() for part in self.parts]}}
