"""1-D test function a·g(λt) whose transform is the witness ĝ = e^{−|·|^{1/β}} * ω."""

import math
from functools import lru_cache
from typing import ClassVar, Sequence

import numpy as np
from pydantic import Field, validator

from moyal.atlas.base import AnalyticFunction
from moyal.const import GHAT_TABLE_NODES
from moyal.witness.appendix import OmegaTable, build_omega, log_g_hat, tail_half_width

_CHUNK = 256


@lru_cache(maxsize=8)
def _omega(beta: float) -> OmegaTable:
    return build_omega(beta)


@lru_cache(maxsize=8)
def _half_line_table(beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes s ≥ 0 and weights w·ĝ(s) for ∫_0^∞ F(s)ĝ(s)ds, truncated where ĝ < e^{−40}."""
    s = np.linspace(0.0, tail_half_width(beta), GHAT_TABLE_NODES)
    h = s[1] - s[0]
    w = np.full(s.shape, h)
    w[0] = w[-1] = 0.5 * h
    return s, w * np.exp(log_g_hat(beta, s, _omega(beta)))


class AppendixGHat(AnalyticFunction):
    family: ClassVar[str] = "appendix_ghat"

    beta: float = Field(description="Index β of the witness.")
    amplitude: float = Field(1.0, description="Amplitude a.")
    dilation: float = Field(1.0, description="Dilation λ.")

    @validator("beta", "dilation")
    def _positive(cls, value):
        if not value > 0:
            raise ValueError(f"AppendixGHat parameters must be positive, got {value}")
        return value

    @property
    def d(self) -> int:
        return 1

    def fourier_values(self, p):
        s = np.asarray(p, dtype=float)[..., 0] / self.dilation
        return (self.amplitude / self.dilation) * np.exp(log_g_hat(self.beta, s, _omega(self.beta))).astype(complex)

    def _cosine_sum(self, n: int, t: np.ndarray) -> np.ndarray:
        s, w = _half_line_table(self.beta)
        flat = t.ravel()
        out = np.empty(flat.shape)
        symbol = w * s**n if n else w
        for start in range(0, flat.size, _CHUNK):
            phase = np.outer(flat[start : start + _CHUNK], s) + 0.5 * math.pi * n
            out[start : start + _CHUNK] = np.cos(phase) @ symbol
        return out.reshape(t.shape) / math.pi

    def values(self, x):
        t = self.dilation * x[..., 0]
        return (self.amplitude * self._cosine_sum(0, t)).astype(complex)

    def derivative_values(self, kappa: Sequence[int], x):
        (n,) = kappa
        t = self.dilation * x[..., 0]
        return (self.amplitude * self.dilation**n * self._cosine_sum(n, t)).astype(complex)

    def factors(self):
        return [self]

    def describe(self) -> dict:
        return {
            "family": self.family,
            "d": 1,
            "params": {"beta": self.beta, "amplitude": self.amplitude, "dilation": self.dilation},
        }
