"""Sampled multiplier certificates for the twist phase.

A certificate is a pair (C_ε, A_ε) with

    |∂^κ e_θ(s)| ≤ C_ε A_ε^{|κ|} κ^{ακ} e^{(ε|s|)^{1/β}}

for every |κ| ≤ κ_max and |s| ≤ s_max. Since |e_θ| = 1 on real s and every monomial
obeys |s^m| ≤ |s|^{|m|}, the left side is bounded by Σ_j a_j t^j at t = |s|; the
sup over t is bounded cell by cell on a uniform t-grid. The certificate is then
checked pointwise on a seeded sample and revalidated on a second one.
"""

import json
import logging
import math
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from moyal.bounds.phase import (
    PhasePoint,
    envelope_coefficients,
    evaluate_polynomial,
    phase_polynomial,
    sample_points,
)
from moyal.const import CERTIFICATE_ENVELOPE_NODES, CERTIFICATE_S_MAX, CERTIFICATE_SLACK
from moyal.errors import CertificateNotFound, DomainError
from moyal.geometry import ThetaMatrix
from moyal.logmath import log_abs, log_multi_power
from moyal.norms import multi_indices

_LOGGER = logging.getLogger(__name__)


class WorstPoint(BaseModel):
    p: tuple[float, ...] = Field(description="p block of the sample point.")
    q: tuple[float, ...] = Field(description="q block of the sample point.")
    kappa: tuple[int, ...] = Field(description="Multi-index attaining the largest gap.")
    log_gap: float = Field(description="log|∂^κ e_θ| minus the log of the certified bound, ≤ 0 when covered.")


class MultiplierCertificate(BaseModel):
    alpha: float = Field(description="Derivative-growth index α.")
    beta: float = Field(description="Growth index β of the exponential weight.")
    epsilon: float = Field(description="ε in e^{(ε|s|)^{1/β}}.")
    kappa_max: int = Field(description="Largest |κ| covered.")
    samples: int = Field(description="Number of sample points checked.")
    seed: int = Field(description="Seed of the sample.")
    C_eps: float = Field(description="Certified constant C_ε.")
    A_eps: float = Field(description="Certified constant A_ε.")
    worst_point: WorstPoint | None = Field(description="Sample point with the largest gap.")
    s_max: float = Field(description="Radius of the sampled and enveloped domain.")

    @property
    def log_c(self) -> float:
        return math.log(self.C_eps)

    @property
    def log_a(self) -> float:
        return math.log(self.A_eps)

    def to_json(self) -> str:
        return json.dumps(self.dict(), indent=2, sort_keys=True)


class RevalidationResult(BaseModel):
    seed: int = Field(description="Seed of the fresh sample.")
    samples: int = Field(description="Number of points checked.")
    violations: int = Field(description="Points where the certified bound fails.")
    worst_point: WorstPoint | None = Field(description="Largest gap on the fresh sample.")


def _weight_log(beta: float, epsilon: float, t: np.ndarray) -> np.ndarray:
    return (epsilon * np.asarray(t, dtype=float)) ** (1.0 / beta)


def _envelope_deficiency(coefficients: np.ndarray, beta: float, epsilon: float, s_max: float) -> float:
    """Upper bound of sup_{0 ≤ t ≤ s_max} log Σ a_j t^j − (εt)^{1/β}."""
    t = np.linspace(0.0, s_max, CERTIFICATE_ENVELOPE_NODES)
    envelope = np.polynomial.polynomial.polyval(t[1:], coefficients)
    with np.errstate(divide="ignore"):
        log_env = np.log(envelope)
    return float(np.max(log_env - _weight_log(beta, epsilon, t[:-1])))


def _sample_gaps(
    theta: ThetaMatrix,
    points: list[PhasePoint],
    alpha: float,
    beta: float,
    epsilon: float,
    kappa_max: int,
    log_c: float,
    log_a: float,
) -> tuple[np.ndarray, WorstPoint | None]:
    s = np.array([point.as_array() for point in points])
    norms = np.array([point.norm for point in points])
    weight = _weight_log(beta, epsilon, norms)
    gaps = np.full(len(points), -math.inf)
    worst = None
    for kappa in multi_indices(2 * theta.d, kappa_max):
        exact = log_abs(evaluate_polynomial(phase_polynomial(theta, kappa), s))
        bound = log_c + sum(kappa) * log_a + log_multi_power(kappa, alpha) + weight
        gap = exact - bound
        index = int(np.argmax(gap))
        if worst is None or gap[index] > worst.log_gap:
            worst = WorstPoint(p=points[index].p, q=points[index].q, kappa=kappa, log_gap=float(gap[index]))
        gaps = np.maximum(gaps, gap)
    return gaps, worst


def multiplier_certificate(
    theta: ThetaMatrix,
    alpha: float,
    beta: float,
    epsilon: float,
    kappa_max: int,
    sample_count: int,
    seed: int,
    s_max: float = CERTIFICATE_S_MAX,
) -> MultiplierCertificate:
    if not beta > 0 or not epsilon > 0:
        raise DomainError(f"certificates need beta > 0 and epsilon > 0, got beta={beta}, epsilon={epsilon}")
    if alpha < beta:
        raise DomainError(f"certificates are issued for alpha >= beta, got alpha={alpha}, beta={beta}")

    deficiency: dict[int, float] = {}
    for kappa in multi_indices(2 * theta.d, kappa_max):
        coefficients = envelope_coefficients(phase_polynomial(theta, kappa))
        value = _envelope_deficiency(coefficients, beta, epsilon, s_max) - log_multi_power(kappa, alpha)
        if math.isnan(value) or value == math.inf:
            raise CertificateNotFound(f"no finite constant covers kappa={kappa} (alpha={alpha}, beta={beta})")
        order = sum(kappa)
        deficiency[order] = max(deficiency.get(order, -math.inf), value)

    log_c = max(0.0, deficiency[0])
    log_a = max([0.0] + [(deficiency[k] - log_c) / k for k in deficiency if k > 0])
    points = sample_points(theta, sample_count, s_max, seed)
    gaps, worst = _sample_gaps(theta, points, alpha, beta, epsilon, kappa_max, log_c, log_a)
    if np.any(gaps > CERTIFICATE_SLACK):
        raise CertificateNotFound(f"certified constants fail at {int(np.sum(gaps > CERTIFICATE_SLACK))} sample points")
    _LOGGER.debug("Certificate alpha=%g beta=%g eps=%g: log C=%g, log A=%g", alpha, beta, epsilon, log_c, log_a)
    return MultiplierCertificate(
        alpha=alpha,
        beta=beta,
        epsilon=epsilon,
        kappa_max=kappa_max,
        samples=sample_count,
        seed=seed,
        C_eps=math.exp(log_c),
        A_eps=math.exp(log_a),
        worst_point=worst,
        s_max=s_max,
    )


def revalidate(theta: ThetaMatrix, certificate: MultiplierCertificate, seed: int) -> RevalidationResult:
    points = sample_points(theta, certificate.samples, certificate.s_max, seed)
    gaps, worst = _sample_gaps(
        theta,
        points,
        certificate.alpha,
        certificate.beta,
        certificate.epsilon,
        certificate.kappa_max,
        certificate.log_c,
        certificate.log_a,
    )
    violations = int(np.sum(gaps > CERTIFICATE_SLACK))
    _LOGGER.info("Revalidated certificate on seed %d: %d violations", seed, violations)
    return RevalidationResult(seed=seed, samples=len(points), violations=violations, worst_point=worst)


def certificate_summary(certificate: MultiplierCertificate, check: RevalidationResult) -> dict[str, Any]:
    out = certificate.dict()
    out["revalidation"] = check.dict()
    return out
