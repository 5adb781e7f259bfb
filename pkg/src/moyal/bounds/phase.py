"""Exact derivatives of the twist phase e_θ(s) = exp(−i⟨q,θp⟩), s = (p, q).

The exponent is bilinear, so ∂^κ e_θ = P_κ(s)·e_θ(s) with P_κ a polynomial. P_κ is
built by the recursion ∂_k(P e^φ) = (∂_k P + P ∂_k φ) e^φ with exact rational
coefficients; floats only enter when the polynomial is evaluated.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from moyal.const import PHASE_ORDER_CAP
from moyal.errors import DimensionMismatch, OrderCap
from moyal.geometry import ThetaMatrix, pair

_LOGGER = logging.getLogger(__name__)

ComplexFraction = tuple[Fraction, Fraction]
Monomial = tuple[int, ...]
Polynomial = dict[Monomial, ComplexFraction]


class PhasePoint(BaseModel):
    """s = (p, q) with |s| = |p| + |q|."""

    p: tuple[float, ...] = Field(description="Momentum-dual block p.")
    q: tuple[float, ...] = Field(description="Momentum-dual block q.")

    @property
    def d(self) -> int:
        return len(self.p)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.p) + np.linalg.norm(self.q))

    def as_array(self) -> np.ndarray:
        return np.array(self.p + self.q, dtype=float)


def make_point(theta: ThetaMatrix, p: Sequence[float], q: Sequence[float]) -> PhasePoint:
    if len(p) != theta.d or len(q) != theta.d:
        raise DimensionMismatch(f"phase point blocks must have length {theta.d}, got {len(p)} and {len(q)}")
    return PhasePoint(p=tuple(float(v) for v in p), q=tuple(float(v) for v in q))


def sample_points(theta: ThetaMatrix, count: int, s_max: float, seed: int) -> list[PhasePoint]:
    """|s| uniform on [0, s_max], direction uniform on the sphere of R^{2d}."""
    rng = np.random.default_rng(seed)
    d = theta.d
    radii = rng.uniform(0.0, s_max, size=count)
    directions = rng.standard_normal((count, 2 * d))
    points = []
    for radius, v in zip(radii, directions):
        size = np.linalg.norm(v[:d]) + np.linalg.norm(v[d:])
        v = v * (radius / size)
        points.append(PhasePoint(p=tuple(v[:d]), q=tuple(v[d:])))
    return points


def phase(theta: ThetaMatrix, s: PhasePoint) -> complex:
    return complex(np.exp(-1j * pair(theta, np.array(s.q), np.array(s.p))))


def _mul(a: ComplexFraction, b: ComplexFraction) -> ComplexFraction:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _add(poly: Polynomial, monomial: Monomial, value: ComplexFraction) -> None:
    re, im = poly.get(monomial, (Fraction(0), Fraction(0)))
    re, im = re + value[0], im + value[1]
    if re == 0 and im == 0:
        poly.pop(monomial, None)
    else:
        poly[monomial] = (re, im)


def _bump(monomial: Monomial, index: int, by: int) -> Monomial:
    return tuple(e + by if i == index else e for i, e in enumerate(monomial))


def _exponent_gradient(entries: tuple[tuple[float, ...], ...], k: int) -> Polynomial:
    """∂_k φ for φ = −(i/2) Σ θ^{μν} q_μ p_ν, variables ordered (p₁…p_d, q₁…q_d)."""
    d = len(entries)
    grad: Polynomial = {}
    zero = (0,) * (2 * d)
    for mu, nu in itertools.product(range(d), repeat=2):
        value = Fraction(entries[mu][nu])
        if value == 0:
            continue
        coefficient = (Fraction(0), -value / 2)
        if k == nu:
            _add(grad, _bump(zero, d + mu, 1), coefficient)
        if k == d + mu:
            _add(grad, _bump(zero, nu, 1), coefficient)
    return grad


def _differentiate(poly: Polynomial, gradient: Polynomial, k: int) -> Polynomial:
    out: Polynomial = {}
    for monomial, coefficient in poly.items():
        power = monomial[k]
        if power:
            _add(out, _bump(monomial, k, -1), (coefficient[0] * power, coefficient[1] * power))
        for g_monomial, g_coefficient in gradient.items():
            product = tuple(a + b for a, b in zip(monomial, g_monomial))
            _add(out, product, _mul(coefficient, g_coefficient))
    return out


@lru_cache(maxsize=1024)
def _polynomial(entries: tuple[tuple[float, ...], ...], kappa: Monomial) -> tuple[tuple[Monomial, ComplexFraction], ...]:
    d = len(entries)
    poly: Polynomial = {(0,) * (2 * d): (Fraction(1), Fraction(0))}
    for k, order in enumerate(kappa):
        gradient = _exponent_gradient(entries, k)
        for _ in range(order):
            poly = _differentiate(poly, gradient, k)
    return tuple(sorted(poly.items()))


def phase_polynomial(theta: ThetaMatrix, kappa: Sequence[int]) -> Polynomial:
    """P_κ with ∂^κ e_θ = P_κ e_θ, as monomial → (re, im) exact coefficients."""
    kappa = tuple(int(k) for k in kappa)
    if len(kappa) != 2 * theta.d or any(k < 0 for k in kappa):
        raise DimensionMismatch(f"phase multi-index {kappa} does not fit 2d={2 * theta.d} variables")
    if sum(kappa) > PHASE_ORDER_CAP:
        raise OrderCap(f"phase derivative order {sum(kappa)} exceeds the cap {PHASE_ORDER_CAP}")
    entries = tuple(tuple(float(v) for v in row) for row in theta.entries)
    return dict(_polynomial(entries, kappa))


def evaluate_polynomial(poly: Polynomial, s: np.ndarray) -> np.ndarray:
    """P at points of shape (..., 2d)."""
    s = np.asarray(s, dtype=float)
    out = np.zeros(s.shape[:-1], dtype=complex)
    for monomial, (re, im) in poly.items():
        out = out + complex(float(re), float(im)) * np.prod(s ** np.array(monomial), axis=-1)
    return out


def phase_derivative_exact(theta: ThetaMatrix, kappa: Sequence[int], s: PhasePoint) -> complex:
    poly = phase_polynomial(theta, kappa)
    return complex(evaluate_polynomial(poly, s.as_array())) * phase(theta, s)


def envelope_coefficients(poly: Polynomial) -> np.ndarray:
    """a_j = Σ_{|m| = j} |c_m|, so |P(s)| ≤ Σ_j a_j |s|^j."""
    degree = max((sum(m) for m in poly), default=0)
    out = np.zeros(degree + 1)
    for monomial, (re, im) in poly.items():
        out[sum(monomial)] += abs(complex(float(re), float(im)))
    return out
