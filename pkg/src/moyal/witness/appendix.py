"""Witness functions ω and ĝ = e^{−|·|^{1/β}} * ω with their moment checks.

For β < 1 the subadditivity of |s|^{1/β} is replaced by
|s+σ|^{1/β} ≤ K(|s|^{1/β} + |σ|^{1/β}) with K = 2^{1/β}; the raw convolution is then
dilated by K^{−β} and divided by e^{1−K} so that ĝ(s) ≥ e^{−|s|^{1/β}} holds again.
"""

import logging
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import gammaln, logsumexp

from moyal.const import OMEGA_NODES, WITNESS_MIN_S_MAX, WITNESS_NODES
from moyal.errors import DomainError, DomainTooSmall
from moyal.logmath import SignedLog, xlogx

_LOGGER = logging.getLogger(__name__)

_CHUNK = 512


def _symmetric_nodes(half_width: float, nodes: int) -> np.ndarray:
    half = np.linspace(0.0, half_width, nodes // 2 + 1)
    return np.concatenate([-half[:0:-1], half])


def _trapezoid_weights(nodes: np.ndarray) -> np.ndarray:
    h = nodes[1] - nodes[0]
    weights = np.full(nodes.shape, h)
    weights[0] = weights[-1] = 0.5 * h
    return weights


def envelope_constant(beta: float) -> float:
    return 1.0 if beta >= 1.0 else 2.0 ** (1.0 / beta)


def tail_half_width(beta: float) -> float:
    """Half-width beyond which ĝ < e^{−40}."""
    return (40.0 * envelope_constant(beta)) ** beta + 2.0


class OmegaTable(BaseModel):
    beta: float = Field(description="Index β the witness is built for.")
    sigma: np.ndarray = Field(description="Symmetric nodes on [−1, 1].")
    weights: np.ndarray = Field(description="Trapezoid weights on sigma.")
    values: np.ndarray = Field(description="ω(σ) ≥ 0, even, with ∫_{−1}^{1} ω = e.")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def integral(self) -> float:
        return float(np.sum(self.weights * self.values))


def build_omega(beta: float, nodes: int = OMEGA_NODES) -> OmegaTable:
    if not beta > 0:
        raise DomainError(f"witness construction needs beta > 0, got {beta}")
    sigma = _symmetric_nodes(1.0, nodes)
    weights = _trapezoid_weights(sigma)
    inside = np.abs(sigma) < 1.0
    profile = np.zeros_like(sigma)
    profile[inside] = np.exp(-1.0 / (1.0 - sigma[inside] ** 2))
    profile = profile * math.e / np.sum(weights * profile)
    return OmegaTable(beta=beta, sigma=sigma, weights=weights, values=profile)


def log_g_hat(beta: float, s: np.ndarray, omega: OmegaTable) -> np.ndarray:
    """log ĝ(s), computed from |s| so that ĝ is exactly even."""
    s = np.abs(np.asarray(s, dtype=float))
    k = envelope_constant(beta)
    dilation = k ** (-beta)
    log_norm = 1.0 - k
    keep = omega.values > 0
    sigma = omega.sigma[keep]
    log_mass = np.log(omega.values[keep] * omega.weights[keep])
    flat = (dilation * s).ravel()
    out = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        block = flat[start : start + _CHUNK]
        exponent = -np.abs(block[:, None] - sigma[None, :]) ** (1.0 / beta) + log_mass[None, :]
        out[start : start + _CHUNK] = logsumexp(exponent, axis=1)
    return out.reshape(s.shape) - log_norm


class GHatTable(BaseModel):
    beta: float = Field(description="Index β.")
    omega: OmegaTable = Field(description="ω the table was built from.")
    s: np.ndarray = Field(description="Symmetric nodes covering |s| ≤ s_max.")
    log_values: np.ndarray = Field(description="log ĝ at the nodes.")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @property
    def s_max(self) -> float:
        return float(self.s[-1])

    @property
    def values(self) -> np.ndarray:
        return np.exp(self.log_values)

    def log_margin(self) -> np.ndarray:
        """log[ĝ(s)·e^{|s|^{1/β}}] at every node."""
        return self.log_values + np.abs(self.s) ** (1.0 / self.beta)


def default_s_max(beta: float) -> float:
    return 50.0 ** beta if beta >= 1.0 else 50.0


def build_g_hat(beta: float, omega: OmegaTable, s_max: float | None = None, nodes: int = WITNESS_NODES) -> GHatTable:
    s_max = default_s_max(beta) if s_max is None else s_max
    s = _symmetric_nodes(s_max, nodes)
    _LOGGER.debug("Building ĝ for beta=%g on |s| <= %g with %d nodes", beta, s_max, s.size)
    return GHatTable(beta=beta, omega=omega, s=s, log_values=log_g_hat(beta, s, omega))


class MomentRow(BaseModel):
    n: int = Field(description="Moment order.")
    moment: SignedLog = Field(description="M_n = (1/2π)∫ sⁿ ĝ(s) ds.")
    envelope_log: float = Field(description="log of the same quadrature with ĝ replaced by e^{−|s|^{1/β}}.")
    envelope_exact_log: float = Field(description="log (β/π)Γ(β(n+1)), the untruncated envelope moment.")
    required_log: float = Field(description="log (βn)^{βn} e^{−βn−1}.")

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def passed(self) -> bool:
        if self.odd:
            return self.moment.sign == 0
        return self.moment.sign > 0 and self.moment.log >= self.required_log

    @property
    def margin_log(self) -> float:
        return self.moment.log - self.required_log


class WitnessReport(BaseModel):
    beta: float = Field(description="Index β.")
    s_max: float = Field(description="Half-width of the domination check grid.")
    nodes: int = Field(description="Number of domination check nodes.")
    min_log_margin: float = Field(description="min over nodes of log[ĝ(s)e^{|s|^{1/β}}], must be ≥ 0.")
    envelope_constant_log: float = Field(description="log C′ with ĝ(s) ≤ C′e^{−|s|^{1/β}/K} on the grid.")
    moment_s_max: float = Field(description="Half-width of the moment quadrature.")
    rows: list[MomentRow] = Field(description="Moment checks.")
    amplitude: float = Field(description="Amplitude a in f(t) = a·g(λt) + derivative term.")
    dilation: float = Field(description="Dilation λ making |∂ⁿf(0)| ≥ n^{βn} on the checked even n.")

    @property
    def domination_passed(self) -> bool:
        return self.min_log_margin >= 0.0

    @property
    def moments_passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def passed(self) -> bool:
        return self.domination_passed and self.moments_passed


def _half_line_moment(n: int, s: np.ndarray, weights: np.ndarray, log_f: np.ndarray) -> float:
    if n == 0:
        terms = log_f + np.log(weights)
    else:
        positive = s > 0
        terms = n * np.log(s[positive]) + log_f[positive] + np.log(weights[positive])
    return float(logsumexp(terms)) + math.log(2.0) - math.log(2.0 * math.pi)


def _extend_to_tail(s: np.ndarray, weights: np.ndarray, tail: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite trapezoid nodes on [0, tail] that keep s as the leading block."""
    if tail <= s[-1]:
        return s, weights
    extra = np.linspace(s[-1], tail, nodes)
    extra_weights = _trapezoid_weights(extra)
    joined = np.concatenate([weights[:-1], [weights[-1] + extra_weights[0]], extra_weights[1:]])
    return np.concatenate([s, extra[1:]]), joined


def moment_lower_bound_check(
    g_hat: GHatTable,
    n_list: Sequence[int],
    s_max: float | None = None,
    nodes: int = WITNESS_NODES,
) -> WitnessReport:
    beta = g_hat.beta
    n_list = sorted(set(int(n) for n in n_list))
    n_max = max(n_list) if n_list else 0
    auto = max(WITNESS_MIN_S_MAX, 4.0 * (beta * n_max) ** beta)
    s_max = auto if s_max is None else s_max
    for n in n_list:
        peak = (beta * n) ** beta
        if s_max < 2.0 * peak:
            raise DomainTooSmall(f"moment quadrature s_max={s_max:g} is below 2·s_n={2.0 * peak:g} for n={n}")

    s = np.linspace(0.0, s_max, nodes)
    weights = _trapezoid_weights(s)
    log_ghat = log_g_hat(beta, s, g_hat.omega)
    log_env = -(s ** (1.0 / beta))
    # M₀ sets the amplitude and integrates ĝ over its whole tail
    s0, weights0 = _extend_to_tail(s, weights, tail_half_width(beta), nodes)
    log_ghat0 = np.concatenate([log_ghat, log_g_hat(beta, s0[s.size :], g_hat.omega)])
    log_env0 = -(s0 ** (1.0 / beta))

    rows = []
    moments = {}
    for n in sorted(set(n_list) | {0}):
        required = xlogx(beta * n) - beta * n - 1.0
        exact_env = math.log(beta / math.pi) + float(gammaln(beta * (n + 1)))
        if n % 2 == 1:
            moment = SignedLog.zero()
            envelope = -math.inf
        elif n == 0:
            log_m = _half_line_moment(0, s0, weights0, log_ghat0)
            moment = SignedLog(sign=1, log=log_m)
            envelope = _half_line_moment(0, s0, weights0, log_env0)
            moments[0] = log_m
        else:
            log_m = _half_line_moment(n, s, weights, log_ghat)
            moment = SignedLog(sign=1, log=log_m)
            envelope = _half_line_moment(n, s, weights, log_env)
            moments[n] = log_m
        if n in n_list:
            rows.append(
                MomentRow(n=n, moment=moment, envelope_log=envelope, envelope_exact_log=exact_env, required_log=required)
            )

    log_amplitude = max(0.0, -moments[0])
    log_dilation = 0.0
    for n, log_m in moments.items():
        if n >= 2:
            log_dilation = max(log_dilation, (xlogx(float(n)) * beta - log_amplitude - log_m) / n)
    k = envelope_constant(beta)
    report = WitnessReport(
        beta=beta,
        s_max=g_hat.s_max,
        nodes=int(g_hat.s.size),
        min_log_margin=float(np.min(g_hat.log_margin())),
        envelope_constant_log=float(np.max(g_hat.log_values + np.abs(g_hat.s) ** (1.0 / beta) / k)),
        moment_s_max=s_max,
        rows=rows,
        amplitude=math.exp(log_amplitude),
        dilation=math.exp(log_dilation),
    )
    _LOGGER.info(
        "Witness beta=%g: domination margin %.3g, moments %s, dilation %.4g",
        beta,
        report.min_log_margin,
        "pass" if report.moments_passed else "FAIL",
        report.dilation,
    )
    return report


def witness_report(beta: float, n_list: Sequence[int], s_max: float | None = None, nodes: int = WITNESS_NODES) -> WitnessReport:
    omega = build_omega(beta)
    table = build_g_hat(beta, omega, s_max=s_max, nodes=nodes)
    return moment_lower_bound_check(table, n_list)
