"""Terms of the Moyal series h_n = (i/2)^n/n! θ^{μ₁ν₁}…θ^{μₙνₙ} ∂_{μ₁…μₙ}f ∂_{ν₁…νₙ}g.

The θ-contraction is the n-th power of Σ θ^{μν} ∂_μ⊗∂_ν, expanded multinomially
over the non-zero entries of θ. For d = 2 this is the binomial sum
Σ_k C(n,k)(−1)^{n−k} t^n ∂₁^k∂₂^{n−k}f · ∂₂^k∂₁^{n−k}g with θ = t·(0 1; −1 0).
"""

import itertools
import logging
import math
from collections import defaultdict
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import comb

from moyal.atlas import AnalyticFunction, leibniz, unit
from moyal.const import N_CAP
from moyal.errors import DimensionMismatch, OrderCap
from moyal.geometry import ThetaMatrix
from moyal.grids import GridSpec, SampledField, Space, sample_derivative

_LOGGER = logging.getLogger(__name__)

MultiIndex = tuple[int, ...]


class TermPair(BaseModel):
    coefficient: float = Field(description="Real weight of ∂^M f · ∂^N g inside the θ-contraction.")
    left: MultiIndex = Field(description="Multi-index M acting on f.")
    right: MultiIndex = Field(description="Multi-index N acting on g.")


def _symplectic_pairs(t: float, n: int) -> dict[tuple[MultiIndex, MultiIndex], float]:
    return {
        ((k, n - k), (n - k, k)): comb(n, k, exact=True) * (-1.0) ** (n - k) * t**n
        for k in range(n + 1)
    }


def _compositions(n: int, parts: int):
    """Tuples of `parts` non-negative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in _compositions(n - head, parts - 1):
            yield (head,) + tail


def _general_pairs(theta: ThetaMatrix, n: int) -> dict[tuple[MultiIndex, MultiIndex], float]:
    d = theta.d
    entries = [(mu, nu, theta.entries[mu, nu]) for mu in range(d) for nu in range(d) if theta.entries[mu, nu] != 0]
    out: dict[tuple[MultiIndex, MultiIndex], float] = defaultdict(float)
    if n == 0:
        out[((0,) * d, (0,) * d)] = 1.0
        return dict(out)
    if not entries:
        return {}
    for counts in _compositions(n, len(entries)):
        left = [0] * d
        right = [0] * d
        weight = math.factorial(n)
        for (mu, nu, value), c in zip(entries, counts):
            left[mu] += c
            right[nu] += c
            weight = weight / math.factorial(c) * value**c
        out[(tuple(left), tuple(right))] += weight
    return dict(out)


def term_pairs(theta: ThetaMatrix, n: int) -> list[TermPair]:
    if n < 0:
        raise OrderCap(f"series order must be non-negative, got {n}")
    t = theta.symplectic_scale()
    raw = _symplectic_pairs(t, n) if t is not None else _general_pairs(theta, n)
    return [TermPair(coefficient=c, left=m, right=k) for (m, k), c in sorted(raw.items()) if c != 0.0]


def term_prefactor(n: int) -> complex:
    return (0.5j) ** n / math.factorial(n)


def _check(f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, spec: GridSpec, n: int, n_cap: int) -> None:
    if not f.d == g.d == theta.d == spec.d:
        raise DimensionMismatch(f"series of d={f.d} and d={g.d} functions, theta d={theta.d}, grid d={spec.d}")
    if n > n_cap:
        raise OrderCap(f"series order {n} exceeds the cap {n_cap}")


def moyal_term_derivative(
    f: AnalyticFunction,
    g: AnalyticFunction,
    theta: ThetaMatrix,
    n: int,
    kappa: Sequence[int],
    spec: GridSpec,
    n_cap: int = N_CAP,
) -> SampledField:
    """∂^κ h_n on the grid, by the Leibniz rule on derivative fields of f and g."""
    _check(f, g, theta, spec, n, n_cap)
    kappa = tuple(kappa)
    data = np.zeros(spec.shape, dtype=complex)
    for term in term_pairs(theta, n):
        for lam, weight in leibniz(kappa):
            rest = tuple(k - j for k, j in zip(kappa, lam))
            left = sample_derivative(f, tuple(a + b for a, b in zip(term.left, lam)), spec).field.data
            right = sample_derivative(g, tuple(a + b for a, b in zip(term.right, rest)), spec).field.data
            data = data + (term.coefficient * weight) * left * right
    return SampledField(spec=spec, space=Space.POSITION, data=term_prefactor(n) * data)


def moyal_term(
    f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, n: int, spec: GridSpec, n_cap: int = N_CAP
) -> SampledField:
    return moyal_term_derivative(f, g, theta, n, (0,) * spec.d, spec, n_cap)


def moyal_partial_sum(
    f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, order: int, spec: GridSpec, n_cap: int = N_CAP
) -> SampledField:
    _check(f, g, theta, spec, order, n_cap)
    data = np.zeros(spec.shape, dtype=complex)
    for n in range(order + 1):
        data = data + moyal_term(f, g, theta, n, spec, n_cap).data
    _LOGGER.debug("Moyal partial sum up to N=%d on n=%d", order, spec.n)
    return SampledField(spec=spec, space=Space.POSITION, data=data)


def coordinate_commutator(theta: ThetaMatrix) -> np.ndarray:
    """x^μ⋆x^ν − x^ν⋆x^μ from the series on coordinate functions; equals iθ^{μν}.

    Only the n = 1 term survives the antisymmetrisation: h_0 = x^μx^ν is symmetric and
    every term with n ≥ 2 differentiates a linear function twice.
    """
    d = theta.d
    out = np.zeros((d, d), dtype=complex)
    for mu, nu in itertools.product(range(d), repeat=2):
        for n in (1, 2):
            for term in term_pairs(theta, n):
                forward = float(term.left == unit(d, mu) and term.right == unit(d, nu))
                backward = float(term.left == unit(d, nu) and term.right == unit(d, mu))
                out[mu, nu] += term_prefactor(n) * term.coefficient * (forward - backward)
    return out