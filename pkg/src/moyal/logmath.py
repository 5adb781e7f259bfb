"""Signed log-magnitude arithmetic for quantities that overflow doubles."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import gammaln, logsumexp


class SignedLog(BaseModel):
    sign: int = Field(description="Sign of the value: -1, 0 or +1.")
    log: float = Field(description="Natural log of the magnitude, -inf for exact zeros.")

    class Config:
        allow_mutation = False

    @classmethod
    def from_value(cls, value: float) -> "SignedLog":
        if value == 0:
            return cls.zero()
        return cls(sign=1 if value > 0 else -1, log=math.log(abs(value)))

    @classmethod
    def zero(cls) -> "SignedLog":
        return cls(sign=0, log=-math.inf)

    @property
    def log10(self) -> float:
        return self.log / math.log(10.0)

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log)

    def __mul__(self, other: "SignedLog") -> "SignedLog":
        if self.sign == 0 or other.sign == 0:
            return SignedLog.zero()
        return SignedLog(sign=self.sign * other.sign, log=self.log + other.log)


def log_factorial(n) -> np.ndarray | float:
    return gammaln(np.asarray(n, dtype=float) + 1.0)


def log_multi_factorial(kappa: Sequence[int]) -> float:
    """log κ! = Σ log κ_i!"""
    return float(sum(gammaln(k + 1.0) for k in kappa))


def log_double_factorial(k: int) -> float:
    """log k!! for k ≥ -1, with (-1)!! = 0!! = 1."""
    if k <= 0:
        return 0.0
    if k % 2 == 0:
        m = k // 2
        return m * math.log(2.0) + float(gammaln(m + 1.0))
    m = (k + 1) // 2
    return float(gammaln(2.0 * m + 1.0) - m * math.log(2.0) - gammaln(m + 1.0))


def xlogx(k: float) -> float:
    """k log k with the convention 0 log 0 = 0 (so that 0^0 = 1)."""
    if k <= 0:
        return 0.0
    return k * math.log(k)


def log_multi_power(kappa: Sequence[int], beta: float) -> float:
    """log κ^{βκ} = β Σ κ_i log κ_i."""
    return beta * sum(xlogx(k) for k in kappa)


def signed_logsumexp(logs: Iterable[float], signs: Iterable[float]) -> SignedLog:
    a = np.asarray(list(logs), dtype=float)
    b = np.asarray(list(signs), dtype=float)
    keep = (b != 0) & np.isfinite(a)
    if not np.any(keep):
        return SignedLog.zero()
    value, sign = logsumexp(a[keep], b=b[keep], return_sign=True)
    if sign == 0 or not np.isfinite(value):
        return SignedLog.zero()
    return SignedLog(sign=int(sign), log=float(value))


def log_abs(values: np.ndarray) -> np.ndarray:
    magnitude = np.abs(values)
    with np.errstate(divide="ignore"):
        return np.where(magnitude > 0, np.log(np.where(magnitude > 0, magnitude, 1.0)), -np.inf)
