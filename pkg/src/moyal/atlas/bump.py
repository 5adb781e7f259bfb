"""Band-limited bump: f̂(p) = exp(1 − (1 − |p/R|²)^{−σ}) inside |p| < R, zero outside."""

import logging
import math
from functools import lru_cache
from typing import ClassVar, Sequence

import numpy as np
from pydantic import Field, validator
from scipy.special import gamma as gamma_fn
from scipy.special import jv, roots_legendre

from moyal.atlas.base import AnalyticFunction
from moyal.const import BUMP_ANGULAR_NODES, BUMP_RADIAL_NODES
from moyal.errors import DerivativeUnavailable

_LOGGER = logging.getLogger(__name__)

_CHUNK = 256


def bump_profile(rho: np.ndarray, sharpness: float = 1.0) -> np.ndarray:
    """exp(1 − (1−ρ²)^{−σ}) for ρ < 1, exactly 0 otherwise; peak value 1 at ρ = 0."""
    rho = np.asarray(rho, dtype=float)
    out = np.zeros_like(rho)
    inside = rho < 1.0
    out[inside] = np.exp(1.0 - (1.0 - rho[inside] ** 2) ** (-sharpness))
    return out


@lru_cache(maxsize=16)
def _radial_rule(sharpness: float) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_legendre(BUMP_RADIAL_NODES)
    rho = 0.5 * (nodes + 1.0)
    return rho, 0.5 * weights * bump_profile(rho, sharpness)


@lru_cache(maxsize=16)
def _momentum_rule(d: int, radius: float, sharpness: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes p and weights w with Σ w·F(p) ≈ (2π)^{−d}∫ f̂(p)F(p)dp."""
    if d == 1:
        nodes, weights = roots_legendre(2 * BUMP_RADIAL_NODES)
        w = radius * weights * bump_profile(np.abs(nodes), sharpness)
        return (radius * nodes)[:, None], w / (2.0 * math.pi)
    nodes, weights = roots_legendre(BUMP_RADIAL_NODES)
    rho = 0.5 * (nodes + 1.0)
    radial = 0.5 * weights * bump_profile(rho, sharpness) * rho
    phi = 2.0 * math.pi * np.arange(BUMP_ANGULAR_NODES) / BUMP_ANGULAR_NODES
    k = radius * rho[:, None]
    p = np.stack([k * np.cos(phi)[None, :], k * np.sin(phi)[None, :]], axis=-1).reshape(-1, 2)
    w = np.repeat(radial, BUMP_ANGULAR_NODES) * radius**2 * (2.0 * math.pi / BUMP_ANGULAR_NODES)
    _LOGGER.debug("Built polar momentum rule with %d nodes for R=%g", p.shape[0], radius)
    return p, w / (2.0 * math.pi) ** 2


class BumpFourier(AnalyticFunction):
    family: ClassVar[str] = "bump_fourier"

    radius: float = Field(description="Support radius R of the Fourier transform.")
    dim: int = Field(2, description="Dimension.")
    sharpness: float = Field(1.0, description="Exponent σ of the bump profile.")

    @validator("radius", "sharpness")
    def _positive(cls, value):
        if not value > 0:
            raise ValueError(f"BumpFourier parameters must be positive, got {value}")
        return value

    @property
    def d(self) -> int:
        return self.dim

    @property
    def band_limit(self) -> float:
        return self.radius

    def fourier_values(self, p):
        p = np.asarray(p, dtype=float)
        return bump_profile(np.linalg.norm(p, axis=-1) / self.radius, self.sharpness).astype(complex)

    def values(self, x):
        # radial inverse transform in Hankel form, ν = d/2 − 1
        r = np.linalg.norm(x, axis=-1)
        nu = self.d / 2.0 - 1.0
        rho, weights = _radial_rule(self.sharpness)
        scale = (2.0 * math.pi) ** (-self.d / 2.0) * self.radius**self.d
        limit = 1.0 / (2.0**nu * gamma_fn(nu + 1.0))
        flat = r.ravel()
        out = np.empty(flat.shape)
        for start in range(0, flat.size, _CHUNK):
            z = self.radius * np.outer(flat[start : start + _CHUNK], rho)
            small = z < 1e-8
            safe = np.where(small, 1.0, z)
            kernel = np.where(small, limit, safe ** (-nu) * jv(nu, safe))
            out[start : start + _CHUNK] = kernel @ (weights * rho ** (self.d - 1))
        return (scale * out).reshape(r.shape).astype(complex)

    def derivative_values(self, kappa: Sequence[int], x):
        if self.d > 2:
            raise DerivativeUnavailable(f"bump derivatives are implemented for d <= 2, got d={self.d}")
        p, w = _momentum_rule(self.d, self.radius, self.sharpness)
        symbol = w.astype(complex)
        for axis, k in enumerate(kappa):
            symbol = symbol * (1j * p[:, axis]) ** k
        flat = x.reshape(-1, self.d)
        out = np.empty(flat.shape[0], dtype=complex)
        for start in range(0, flat.shape[0], _CHUNK):
            phase = np.exp(1j * flat[start : start + _CHUNK] @ p.T)
            out[start : start + _CHUNK] = phase @ symbol
        return out.reshape(x.shape[:-1])

    def describe(self) -> dict:
        return {
            "family": self.family,
            "d": self.d,
            "params": {"radius": self.radius, "sharpness": self.sharpness},
        }
