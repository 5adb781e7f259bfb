"""Cauchy-inequality bounds for the phase derivatives and the choice of polydisk radius."""

import logging
import math
from enum import Enum
from typing import Sequence

from moyal.bounds.phase import PhasePoint
from moyal.const import CONSTANT_RADIUS
from moyal.errors import DomainError
from moyal.geometry import ThetaMatrix, theta_abs
from moyal.logmath import log_multi_factorial

_LOGGER = logging.getLogger(__name__)


class RadiusBranch(str, Enum):
    SHRINKING = "shrinking"
    POWER_HIGH = "power-high"
    POWER_LOW = "power-low"
    CONSTANT = "constant"


def cauchy_bound(theta: ThetaMatrix, kappa: Sequence[int], s: PhasePoint, r: float) -> float:
    """log[κ! r^{−|κ|} exp(r·θ_abs·(|s| + 2r))]."""
    if not r > 0:
        raise DomainError(f"polydisk radius must be positive, got {r}")
    order = sum(kappa)
    return log_multi_factorial(kappa) - order * math.log(r) + r * theta_abs(theta) * (s.norm + 2.0 * r)


def optimal_r(theta: ThetaMatrix, kappa: Sequence[int], s: PhasePoint, beta: float, epsilon: float) -> tuple[float, RadiusBranch]:
    if beta < 0:
        raise DomainError(f"beta must be non-negative, got {beta}")
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    order = sum(kappa)
    if beta > 1:
        size = theta_abs(theta)
        if size == 0:
            return CONSTANT_RADIUS, RadiusBranch.CONSTANT
        if s.norm == 0:
            raise DomainError("the shrinking radius is undefined at s = 0")
        r = (epsilon * s.norm) ** (1.0 / beta) / (size * s.norm)
        return r, RadiusBranch.SHRINKING
    if beta in (0.0, 1.0):
        return CONSTANT_RADIUS, RadiusBranch.CONSTANT
    if beta >= 0.5:
        if order == 0:
            return CONSTANT_RADIUS, RadiusBranch.CONSTANT
        return float(order ** (1.0 - beta)), RadiusBranch.POWER_HIGH
    return float(max(order, 1) ** beta), RadiusBranch.POWER_LOW
