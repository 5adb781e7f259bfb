"""Per-term diagnostics of the Moyal series against the absolutely convergent bound.

The inputs are measured at (A₁,B₁) and (A₂,B₂) picked from a logarithmic lattice
around the requested scales. The terms are measured at the merged scales

    A^{−1/α} = A₁^{−1/α} + A₂^{−1/α}   (A = min(A₁,A₂) when α = 0),
    B = e^β (B₁ + B₂),

with C = ‖f‖‖g‖, so that every measured term norm sits below the bound on the
same grid nodes.
"""

import itertools
import logging
import math
from enum import Enum
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import logsumexp

from moyal.atlas import AnalyticFunction
from moyal.divergence.prop1 import u_term
from moyal.errors import TransformUnavailable, UnsupportedTheta
from moyal.geometry import ThetaMatrix, symplectic, theta_abs
from moyal.grids import GridSpec, Space, sample
from moyal.logmath import SignedLog
from moyal.norms.gs import DerivativeTable, GSParams, derivative_source, term_norm_bound
from moyal.star import moyal_term_derivative

_LOGGER = logging.getLogger(__name__)

LATTICE_STEPS = (0.5, 1.0 / math.sqrt(2.0), 1.0, math.sqrt(2.0), 2.0)
BOUND_SLACK = 1e-9
TAIL_WINDOW = 3


class Verdict(str, Enum):
    CONVERGING = "RatioConverging"
    DIVERGING = "RatioDiverging"
    INCONCLUSIVE = "Inconclusive"


class TermReport(BaseModel):
    n: int = Field(description="Series order.")
    u_value: SignedLog | None = Field(description="r_n with u(h_n) = iⁿ r_n, when the functional applies.")
    norm_estimate: float = Field(description="log of the grid estimate of ‖h_n‖ at the merged scales.")
    bound29: float = Field(description="log of C(B₁B₂e^{2β}θ_abs)ⁿ n^{2βn}/n!.")
    ratio: float | None = Field(description="‖h_n‖/‖h_{n−1}‖ when both are non-zero.")

    @property
    def within_bound(self) -> bool:
        if self.norm_estimate == -math.inf:
            return True
        return self.norm_estimate <= self.bound29 + BOUND_SLACK * max(1.0, abs(self.bound29))


class ScaleChoice(BaseModel):
    A1: float = Field(description="Decay scale of f.")
    B1: float = Field(description="Derivative scale of f.")
    A2: float = Field(description="Decay scale of g.")
    B2: float = Field(description="Derivative scale of g.")
    A: float = Field(description="Merged decay scale for the terms.")
    B: float = Field(description="Merged derivative scale for the terms.")
    log_c: float = Field(description="log ‖f‖‖g‖ at the chosen input scales.")


class ConvergenceReport(BaseModel):
    rows: list[TermReport] = Field(description="One row per n ≤ N_max.")
    scales: ScaleChoice = Field(description="Lattice choice of the input constants.")
    verdict: Verdict = Field(description="Tail-ratio verdict on the norm column.")
    u_verdict: Verdict | None = Field(description="Tail-ratio verdict on the u column.")

    @property
    def all_within_bound(self) -> bool:
        return all(row.within_bound for row in self.rows)

    def csv_rows(self) -> list[dict]:
        out = []
        for row in self.rows:
            out.append(
                {
                    "n": row.n,
                    "u_re_log": "" if row.u_value is None else row.u_value.log,
                    "u_sign": "" if row.u_value is None else row.u_value.sign,
                    "norm_log": row.norm_estimate,
                    "bound29_log": row.bound29,
                    "ratio": "" if row.ratio is None else row.ratio,
                    "verdict": self.verdict.value,
                }
            )
        return out


def merged_scales(alpha: float, beta: float, A1: float, B1: float, A2: float, B2: float) -> tuple[float, float]:
    if alpha == 0:
        A = min(A1, A2)
    else:
        A = (A1 ** (-1.0 / alpha) + A2 ** (-1.0 / alpha)) ** (-alpha)
    return A, math.exp(beta) * (B1 + B2)


def tail_verdict(logs: Sequence[float], step: int = 2) -> Verdict:
    """Compare the last few step-ratios of a log-magnitude column with 1."""
    if len(logs) <= step:
        return Verdict.INCONCLUSIVE
    tail = list(logs[1:])
    if tail and all(value == -math.inf for value in tail):
        return Verdict.CONVERGING
    ratios = []
    for n in range(len(logs) - 1, step - 1, -1):
        previous, current = logs[n - step], logs[n]
        if previous == -math.inf:
            continue
        ratios.append(current - previous)
        if len(ratios) == TAIL_WINDOW:
            break
    if not ratios:
        return Verdict.INCONCLUSIVE
    if all(r < 0 for r in ratios):
        return Verdict.CONVERGING
    if all(r > 0 for r in ratios):
        return Verdict.DIVERGING
    return Verdict.INCONCLUSIVE


def _lattice(scale: float) -> list[float]:
    return [scale * step for step in LATTICE_STEPS]


def choose_scales(
    f_table: DerivativeTable,
    g_table: DerivativeTable,
    params: GSParams,
    theta_size: float,
    n_max: int,
) -> ScaleChoice:
    """Pick (A₁,B₁,A₂,B₂) minimising the summed term bound over the lattice."""
    k_in = f_table.k_max
    candidates = list(itertools.product(_lattice(params.A), _lattice(params.B)))
    f_norms = {c: f_table.log_norm(params.with_scales(*c, k_max=k_in)) for c in candidates}
    g_norms = {c: g_table.log_norm(params.with_scales(*c, k_max=k_in)) for c in candidates}
    best, best_score = None, math.inf
    for (A1, B1), (A2, B2) in itertools.product(candidates, repeat=2):
        log_c = f_norms[(A1, B1)] + g_norms[(A2, B2)]
        bounds = [term_norm_bound(n, params.beta, B1, B2, theta_size, log_c) for n in range(n_max + 1)]
        score = float(logsumexp(bounds))
        if score < best_score:
            best, best_score = (A1, B1, A2, B2, log_c), score
    A1, B1, A2, B2, log_c = best
    A, B = merged_scales(params.alpha, params.beta, A1, B1, A2, B2)
    _LOGGER.debug("Lattice choice A1=%g B1=%g A2=%g B2=%g -> A=%g B=%g, log C=%g", A1, B1, A2, B2, A, B, log_c)
    return ScaleChoice(A1=A1, B1=B1, A2=A2, B2=B2, A=A, B=B, log_c=log_c)


def _u_column(f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, n: int, spec: GridSpec) -> SignedLog | None:
    if theta != symplectic(1.0) or spec.d != 2:
        return None
    try:
        return u_term(f, g, theta, n)
    except TransformUnavailable:
        pass
    try:
        return u_term(sample(f, spec, Space.MOMENTUM), sample(g, spec, Space.MOMENTUM), theta, n)
    except (TransformUnavailable, UnsupportedTheta):
        return None


def convergence_report(
    f: AnalyticFunction,
    g: AnalyticFunction,
    theta: ThetaMatrix,
    params: GSParams,
    spec: GridSpec,
    n_max: int,
) -> ConvergenceReport:
    k_in = params.k_max + n_max
    f_table = DerivativeTable.build(derivative_source(f, spec), spec, k_in)
    g_table = f_table if f == g else DerivativeTable.build(derivative_source(g, spec), spec, k_in)
    size = theta_abs(theta)
    scales = choose_scales(f_table, g_table, params, size, n_max)
    term_params = params.with_scales(scales.A, scales.B)

    rows: list[TermReport] = []
    for n in range(n_max + 1):
        table = DerivativeTable.build(
            lambda kappa, n=n: moyal_term_derivative(f, g, theta, n, kappa, spec).data,
            spec,
            params.k_max,
        )
        norm = table.log_norm(term_params)
        previous = rows[-1].norm_estimate if rows else -math.inf
        ratio = math.exp(norm - previous) if np.isfinite(norm) and np.isfinite(previous) else None
        rows.append(
            TermReport(
                n=n,
                u_value=_u_column(f, g, theta, n, spec),
                norm_estimate=norm,
                bound29=term_norm_bound(n, params.beta, scales.B1, scales.B2, size, scales.log_c),
                ratio=ratio,
            )
        )

    verdict = tail_verdict([row.norm_estimate for row in rows])
    u_logs = [row.u_value.log for row in rows if row.u_value is not None]
    u_verdict = tail_verdict(u_logs) if len(u_logs) == len(rows) else None
    _LOGGER.info("Convergence report up to N=%d: %s (u column: %s)", n_max, verdict.value, u_verdict and u_verdict.value)
    return ConvergenceReport(rows=rows, scales=scales, verdict=verdict, u_verdict=u_verdict)
