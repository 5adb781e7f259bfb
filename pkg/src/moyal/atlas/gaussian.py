import math
from typing import ClassVar, Sequence

import numpy as np
from pydantic import Field, validator

from moyal.atlas.base import AnalyticFunction
from moyal.atlas.hermite import gaussian_derivative_log, hermite


class Gaussian(AnalyticFunction):
    """e^{−γ|x−c|²}"""

    family: ClassVar[str] = "gaussian"

    gamma: float = Field(description="Inverse squared length γ > 0.")
    center: tuple[float, ...] = Field(description="Center c, one entry per axis.")

    @validator("gamma")
    def _positive(cls, value):
        if not value > 0:
            raise ValueError(f"Gaussian requires gamma > 0, got {value}")
        return value

    @property
    def d(self) -> int:
        return len(self.center)

    @property
    def closed_form_derivatives(self) -> bool:
        return True

    def values(self, x):
        shifted = x - np.asarray(self.center)
        return np.exp(-self.gamma * np.sum(shifted**2, axis=-1)).astype(complex)

    def fourier_values(self, p):
        p = np.asarray(p, dtype=float)
        amplitude = (math.pi / self.gamma) ** (self.d / 2.0)
        envelope = np.exp(-np.sum(p**2, axis=-1) / (4.0 * self.gamma))
        return amplitude * envelope * np.exp(-1j * (p @ np.asarray(self.center)))

    def derivative_values(self, kappa: Sequence[int], x):
        sign = np.ones(x.shape[:-1])
        log_abs = np.zeros(x.shape[:-1])
        for axis, k in enumerate(kappa):
            s, la = gaussian_derivative_log(k, self.gamma, x[..., axis] - self.center[axis])
            sign = sign * s
            log_abs = log_abs + la
        return (sign * np.exp(log_abs)).astype(complex)

    def factors(self):
        return [Gaussian(gamma=self.gamma, center=(c,)) for c in self.center]

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"gamma": self.gamma, "center": list(self.center)}}


class HermiteGaussian(AnalyticFunction):
    """Π_i H_{m_i}(√γ x_i) e^{−γ x_i²}"""

    family: ClassVar[str] = "hermite_gaussian"

    gamma: float = Field(description="Inverse squared length γ > 0.")
    orders: tuple[int, ...] = Field(description="Hermite order per axis.")

    @validator("gamma")
    def _positive(cls, value):
        if not value > 0:
            raise ValueError(f"HermiteGaussian requires gamma > 0, got {value}")
        return value

    @property
    def d(self) -> int:
        return len(self.orders)

    @property
    def closed_form_derivatives(self) -> bool:
        return True

    def values(self, x):
        root = math.sqrt(self.gamma)
        out = np.ones(x.shape[:-1], dtype=complex)
        for axis, m in enumerate(self.orders):
            t = x[..., axis]
            out = out * hermite(m, root * t) * np.exp(-self.gamma * t * t)
        return out

    def fourier_values(self, p):
        p = np.asarray(p, dtype=float)
        root = math.sqrt(self.gamma)
        out = np.ones(p.shape[:-1], dtype=complex)
        for axis, m in enumerate(self.orders):
            q = p[..., axis]
            out = out * (-1j * q / root) ** m * math.sqrt(math.pi / self.gamma) * np.exp(-q * q / (4.0 * self.gamma))
        return out

    def derivative_values(self, kappa: Sequence[int], x):
        # H_m(√γt)e^{−γt²} = (−1)^m γ^{−m/2} ∂^m e^{−γt²}
        out = np.ones(x.shape[:-1], dtype=complex)
        for axis, (m, k) in enumerate(zip(self.orders, kappa)):
            sign, log_abs = gaussian_derivative_log(m + k, self.gamma, x[..., axis])
            out = out * (-1.0) ** m * sign * np.exp(log_abs - 0.5 * m * math.log(self.gamma))
        return out

    def factors(self):
        return [HermiteGaussian(gamma=self.gamma, orders=(m,)) for m in self.orders]

    def describe(self) -> dict:
        return {"family": self.family, "d": self.d, "params": {"gamma": self.gamma, "orders": list(self.orders)}}


def gaussian_self_product(gamma: float, t: float, x: np.ndarray) -> np.ndarray:
    """e^{−γ|x|²} × e^{−γ|x|²} in d=2 for θ = t·(0 1; −1 0)."""
    x = np.asarray(x, dtype=float)
    denom = 1.0 + (gamma * t) ** 2
    return np.exp(-2.0 * gamma * np.sum(x**2, axis=-1) / denom) / denom
