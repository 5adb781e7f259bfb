"""Dependence of the twisted product on θ near θ = 0."""

import logging
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from moyal.atlas import AnalyticFunction
from moyal.bounds.phase import PhasePoint, evaluate_polynomial, phase, phase_polynomial
from moyal.errors import DomainError
from moyal.geometry import ThetaMatrix, theta_abs
from moyal.grids import NormKind, field_norm, sample
from moyal.logmath import log_abs, log_multi_power
from moyal.norms import multi_indices
from moyal.star import StarConfig, twisted_product

_LOGGER = logging.getLogger(__name__)


class ContinuityRow(BaseModel):
    theta_abs: float = Field(description="Σ|θ^{jk}| of the row's θ.")
    eps_sup: float = Field(description="sup |f×_θ g − fg| on the grid.")
    eps_l2: float = Field(description="L² norm of f×_θ g − fg on the grid.")


class ContinuityTable(BaseModel):
    rows: list[ContinuityRow] = Field(description="One row per θ, in input order.")
    slope: float | None = Field(description="Fitted slope of log ε_sup against log θ_abs over the non-zero rows.")

    def csv_rows(self) -> list[dict]:
        return [row.dict() for row in self.rows]


class BoundCheck(BaseModel):
    checked: int = Field(description="Number of (point, κ) pairs checked.")
    violations: int = Field(description="Pairs where the inequality fails.")
    worst_log_gap: float = Field(description="Largest log(left/right); ≤ 0 when every pair holds.")

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _check_size(theta: ThetaMatrix) -> float:
    size = theta_abs(theta)
    if size > 1.0:
        raise DomainError(f"continuity checks assume theta_abs <= 1, got {size:g}")
    return size


def continuity_experiment(
    f: AnalyticFunction, g: AnalyticFunction, theta_list: Sequence[ThetaMatrix], cfg: StarConfig
) -> ContinuityTable:
    sizes = [_check_size(theta) for theta in theta_list]
    pointwise = sample(f, cfg.spec).data * sample(g, cfg.spec).data
    rows = []
    for theta, size in zip(theta_list, sizes):
        difference = twisted_product(f, g, theta, cfg)
        difference = difference.with_data(difference.data - pointwise)
        rows.append(
            ContinuityRow(
                theta_abs=size,
                eps_sup=field_norm(difference, NormKind.SUP),
                eps_l2=field_norm(difference, NormKind.L2),
            )
        )
    fit = [(row.theta_abs, row.eps_sup) for row in rows if row.theta_abs > 0 and row.eps_sup > 0]
    slope = None
    if len(fit) >= 2:
        x, y = np.log(np.array(fit)).T
        slope = float(np.polyfit(x, y, 1)[0])
    _LOGGER.info("Continuity experiment over %d thetas, slope %s", len(rows), slope)
    return ContinuityTable(rows=rows, slope=slope)


def chi_bound_check(theta: ThetaMatrix, points: Sequence[PhasePoint]) -> BoundCheck:
    """|1 − e_θ(s)| ≤ θ_abs·e^{|s|²} on the given points."""
    size = _check_size(theta)
    gaps = []
    for point in points:
        left = abs(1.0 - phase(theta, point))
        if left == 0.0:
            continue
        right = (math.log(size) if size > 0 else -math.inf) + point.norm**2
        gaps.append(math.log(left) - right)
    worst = max(gaps, default=-math.inf)
    return BoundCheck(checked=len(points), violations=sum(gap > 0 for gap in gaps), worst_log_gap=worst)


def difference_bound_check(theta: ThetaMatrix, alpha: float, kappa_max: int, points: Sequence[PhasePoint]) -> BoundCheck:
    """|∂^κ(1 − e_θ)(s)| ≤ θ_abs·e^{2|κ|}κ^{ακ}e^{2|s|²} for |κ| ≤ κ_max."""
    size = _check_size(theta)
    if alpha < 0.5:
        raise DomainError(f"the difference bound is stated for alpha >= 1/2, got {alpha}")
    log_size = math.log(size) if size > 0 else -math.inf
    s = np.array([point.as_array() for point in points])
    norms = np.array([point.norm for point in points])
    e = np.array([phase(theta, point) for point in points])
    worst, violations, checked = -math.inf, 0, 0
    for kappa in multi_indices(2 * theta.d, kappa_max):
        if any(kappa):
            left = log_abs(evaluate_polynomial(phase_polynomial(theta, kappa), s) * e)
        else:
            left = log_abs(1.0 - e)
        right = log_size + 2.0 * sum(kappa) + log_multi_power(kappa, alpha) + 2.0 * norms**2
        with np.errstate(invalid="ignore"):
            gap = np.where(np.isneginf(left), -np.inf, left - right)
        worst = max(worst, float(np.max(gap)))
        violations += int(np.sum(gap > 0))
        checked += len(points)
    return BoundCheck(checked=checked, violations=violations, worst_log_gap=worst)
