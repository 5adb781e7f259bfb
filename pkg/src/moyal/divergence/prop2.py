"""A 1-D witness profile dominating the Gaussian e^{−s²/(4γ)}.

With λ = 1/(2√γ) and ρ = 1/β, ĝ_β(λs) ≥ e^{−λ^ρ|s|^ρ}, so c·ĝ_β(λs) dominates
e^{−s²/(4γ)} once log c ≥ max_t (λ^ρ t^ρ − t²/(4γ)). For β = 1/2 the two exponents
coincide and c = 1.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, Field

from moyal.atlas import AppendixGHat, TensorProduct
from moyal.errors import DomainError, DominationFailed
from moyal.witness import build_omega, log_g_hat

_LOGGER = logging.getLogger(__name__)

CHECK_HALF_WIDTH = 40.0
CHECK_NODES = 10_000


class Prop2Dominator(BaseModel):
    beta: float = Field(description="Index β ≥ 1/2 of the witness.")
    gamma: float = Field(description="Gaussian parameter γ of the dominated e^{−s²/(4γ)}.")
    log_c: float = Field(description="log of the amplitude c.")
    profile: AppendixGHat = Field(description="1-D function with transform c·ĝ_β(λp).")
    min_log_margin: float = Field(description="min over the check grid of log φ(s) + s²/(4γ).")

    def tensor(self) -> TensorProduct:
        """f with f̂(p) = φ(p₁)φ(p₂) ≥ e^{−|p|²/(4γ)}."""
        return TensorProduct(parts=[self.profile, self.profile])


def dominator_log_c(beta: float, gamma: float) -> float:
    if beta == 0.5:
        return 0.0
    rho = 1.0 / beta
    a = (0.5 / math.sqrt(gamma)) ** rho
    t_star = (2.0 * gamma * a * rho) ** (1.0 / (2.0 - rho))
    return max(0.0, a * t_star**rho - t_star**2 / (4.0 * gamma))


def prop2_dominator(beta: float, gamma: float) -> Prop2Dominator:
    if beta < 0.5:
        raise DomainError(f"the Gaussian dominator needs beta >= 1/2, got {beta}")
    if not gamma > 0:
        raise DomainError(f"the Gaussian dominator needs gamma > 0, got {gamma}")
    lam = 0.5 / math.sqrt(gamma)
    log_c = dominator_log_c(beta, gamma)

    s = np.linspace(-CHECK_HALF_WIDTH, CHECK_HALF_WIDTH, CHECK_NODES)
    margin = log_c + log_g_hat(beta, lam * s, build_omega(beta)) + s**2 / (4.0 * gamma)
    worst = float(np.min(margin))
    if worst < 0.0:
        raise DominationFailed(
            f"c·ĝ(λs) falls below e^(-s²/4γ) at s={s[int(np.argmin(margin))]:g} "
            f"(beta={beta}, gamma={gamma}, log margin {worst:g})"
        )
    _LOGGER.debug("Dominator beta=%g gamma=%g: log c=%g, min log margin %g", beta, gamma, log_c, worst)
    profile = AppendixGHat(beta=beta, amplitude=math.exp(log_c) / lam, dilation=1.0 / lam)
    return Prop2Dominator(beta=beta, gamma=gamma, log_c=log_c, profile=profile, min_log_margin=worst)
