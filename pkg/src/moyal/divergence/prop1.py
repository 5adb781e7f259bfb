"""The functional u(h) = ∫ h(0, x₂) dx₂ on the terms of the Moyal series of f ⋆ g.

With θ the standard symplectic matrix, ⟨p,θq⟩ = (p₁q₂ − p₂q₁)/2 and

    u(h_n) = (1/2π) ∫ ĥ_n(p₁, 0) dp₁,
    ĥ_n(p) = iⁿ/((2π)² n!) ∫ f̂(q) ĝ(p−q) ⟨p,θq⟩ⁿ dq.

All values are reported as u(h_n) = iⁿ r_n with r_n real for real inputs; the
row data carry r_n in signed-log form.

For f̂ = a₁⊗a₂, ĝ = b₁⊗b₂ the integrals factorise:

    r_n = M_n(a₁*b₁) · ∫ a₂(q) b₂(−q) qⁿ dq / ((2π)³ n! 2ⁿ),
    M_n(a*b) = Σ_k C(n,k) M_k(a) M_{n−k}(b).

For a centred Gaussian pair this gives √(π/2γ)(γⁿ/n!)[(n−1)!!]² at even n. The
frequently quoted form with [(2n−1)!!]² is kept as `prop1_printed_form` and
reported next to it; it does not agree with the integrals above (at γ = 2, n = 2
it gives 15.952 against 1.7725).
"""

import logging
import math
from enum import Enum
from typing import Union

import numpy as np
from pydantic import BaseModel, Field
from scipy.special import gammaln

from moyal.atlas import AnalyticFunction, Gaussian
from moyal.const import MOMENT_HALF_WIDTH, MOMENT_NODES
from moyal.errors import GridMismatch, SpaceMismatch, TransformUnavailable, UnsupportedTheta
from moyal.geometry import ThetaMatrix, symplectic
from moyal.grids import SampledField, Space
from moyal.logmath import SignedLog, log_double_factorial, log_factorial, signed_logsumexp

_LOGGER = logging.getLogger(__name__)


def _require_standard(theta: ThetaMatrix) -> None:
    if theta != symplectic(1.0):
        raise UnsupportedTheta("the u functional is set up for d=2 and θ = (0 1; −1 0)")


def u_functional(field: SampledField) -> complex:
    """Δx · Σ_j field(0, x₂_j)."""
    if field.space != Space.POSITION:
        raise SpaceMismatch("u acts on position-space fields")
    spec = field.spec
    if spec.d != 2:
        raise GridMismatch(f"u needs a d=2 grid, got d={spec.d}")
    row = spec.origin_index
    if spec.axis(Space.POSITION)[row] != 0.0:
        raise GridMismatch("x₁ = 0 is not a grid node")
    return complex(spec.dx * np.sum(field.data[row, :]))


class _MomentRule:
    """Symmetric 1-D rule with positive and negative nodes folded in pairs."""

    def __init__(self, half_width: float = MOMENT_HALF_WIDTH, nodes: int = MOMENT_NODES):
        half = np.linspace(0.0, half_width, nodes // 2 + 1)
        self.positive = half[1:]
        self.h = half[1] - half[0]
        self.scale = half_width

    def moment(self, fn: AnalyticFunction, n: int, reflect: AnalyticFunction | None = None) -> tuple[complex, float]:
        """∫ a(q) [b(−q)] qⁿ dq as (mantissa, log scale) with value = mantissa·e^{log scale}."""
        q = self.positive[:, None]
        plus = fn.fourier_values(q)
        minus = fn.fourier_values(-q)
        if reflect is not None:
            plus = plus * reflect.fourier_values(-q)
            minus = minus * reflect.fourier_values(q)
        zero = fn.fourier_values(np.zeros((1, 1)))[0]
        if reflect is not None:
            zero = zero * reflect.fourier_values(np.zeros((1, 1)))[0]
        ratio = (self.positive / self.scale) ** n
        folded = plus + (-1.0) ** n * minus
        total = self.h * np.sum(ratio * folded)
        if n == 0:
            total = total + self.h * zero
        return complex(total), n * math.log(self.scale)


def _signed(value: complex, log_scale: float) -> SignedLog:
    if value.real == 0.0:
        return SignedLog.zero()
    return SignedLog(sign=1 if value.real > 0 else -1, log=math.log(abs(value.real)) + log_scale)


def _convolution_moment(rule: _MomentRule, a: AnalyticFunction, b: AnalyticFunction, n: int) -> SignedLog:
    left = [rule.moment(a, k) for k in range(n + 1)]
    right = left if a == b else [rule.moment(b, k) for k in range(n + 1)]
    logs, signs = [], []
    for k in range(n + 1):
        (mk, sk), (mj, sj) = left[k], right[n - k]
        product = mk * mj
        if product.real == 0.0:
            continue
        logs.append(float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)) + math.log(abs(product.real)) + sk + sj)
        signs.append(np.sign(product.real))
    return signed_logsumexp(logs, signs)


def _factorised(f: AnalyticFunction, g: AnalyticFunction, n: int) -> SignedLog:
    a1, a2 = f.factors()
    b1, b2 = g.factors()
    rule = _MomentRule()
    first = _convolution_moment(rule, a1, b1, n)
    mantissa, scale = rule.moment(a2, n, reflect=b2)
    second = _signed(mantissa, scale)
    prefactor = SignedLog(sign=1, log=-3.0 * math.log(2.0 * math.pi) - float(log_factorial(n)) - n * math.log(2.0))
    return prefactor * first * second


def _on_grid(fh: SampledField, gh: SampledField, n: int) -> SignedLog:
    if fh.space != Space.MOMENTUM or gh.space != Space.MOMENTUM:
        raise SpaceMismatch("u_term on grids takes momentum-space fields")
    if fh.spec != gh.spec or fh.spec.d != 2:
        raise GridMismatch("u_term needs two momentum fields on the same d=2 grid")
    spec = fh.spec
    size = spec.n
    axis = spec.axis(Space.MOMENTUM)
    scaled = (axis / spec.P) ** n
    # ĝ(r₁, −q₂) with index 0 mapped onto itself
    g_reflected = np.roll(np.flip(gh.data, axis=1), 1, axis=1)
    inner = (fh.data * scaled[None, :]) @ g_reflected.T
    row = np.zeros(size, dtype=complex)
    for k in range(size):
        j = np.arange(size)
        m = k - j + size // 2
        valid = (m >= 0) & (m < size)
        row[k] = np.sum(inner[j[valid], m[valid]])
    integral = spec.dp * np.sum(row * scaled) * spec.dp**2
    log_scale = 2 * n * math.log(spec.P) - 3.0 * math.log(2.0 * math.pi) - float(log_factorial(n)) - n * math.log(2.0)
    return _signed(complex(integral), log_scale)


def u_term(
    f: Union[AnalyticFunction, SampledField],
    g: Union[AnalyticFunction, SampledField],
    theta: ThetaMatrix,
    n: int,
) -> SignedLog:
    """r_n with u(h_n) = iⁿ r_n."""
    _require_standard(theta)
    if isinstance(f, AnalyticFunction) and isinstance(g, AnalyticFunction):
        try:
            return _factorised(f, g, n)
        except TransformUnavailable:
            raise TransformUnavailable(f"u_term needs tensor-product inputs with transforms, got {f.family}, {g.family}")
    if isinstance(f, SampledField) and isinstance(g, SampledField):
        return _on_grid(f, g, n)
    raise TransformUnavailable("u_term takes two atlas functions or two momentum fields")


def prop1_closed_form(gamma: float, n: int) -> SignedLog:
    """r_n for f = g = e^{−γ|x|²}: √(π/2γ)(γⁿ/n!)[(n−1)!!]² at even n, exact zero at odd n."""
    if n % 2 == 1:
        return SignedLog.zero()
    log_value = 0.5 * math.log(math.pi / (2.0 * gamma)) + n * math.log(gamma) - float(log_factorial(n))
    return SignedLog(sign=1, log=log_value + 2.0 * log_double_factorial(n - 1))


def prop1_printed_form(gamma: float, n: int) -> SignedLog:
    """√(π/2γ)(γⁿ/n!)[(2n−1)!!]² at even n, exact zero at odd n."""
    if n % 2 == 1:
        return SignedLog.zero()
    log_value = 0.5 * math.log(math.pi / (2.0 * gamma)) + n * math.log(gamma) - float(log_factorial(n))
    return SignedLog(sign=1, log=log_value + 2.0 * log_double_factorial(2 * n - 1))


def prop1_lower_bound(gamma: float, n: int) -> float | None:
    """log √(π/2γ)γⁿ/n for n ≥ 1."""
    if n < 1:
        return None
    return 0.5 * math.log(math.pi / (2.0 * gamma)) + n * math.log(gamma) - math.log(n)


def closed_form_ratio(gamma: float, n: int) -> float:
    """a_{n+2}/a_n = γ²(n+1)/(n+2) for even n."""
    return gamma**2 * (n + 1) / (n + 2)


class DivergenceVerdict(str, Enum):
    DIVERGES = "Diverges"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"
    INCONCLUSIVE = "Inconclusive"


class DivergenceRow(BaseModel):
    n: int = Field(description="Series order.")
    u_quadrature: SignedLog = Field(description="r_n from the factorised quadrature.")
    u_closed_form: SignedLog = Field(description="r_n from the Gaussian closed form.")
    u_printed_form: SignedLog = Field(description="Value of the [(2n−1)!!]² form.")
    lower_bound: float | None = Field(description="log √(π/2γ)γⁿ/n, absent at n = 0.")

    @property
    def relative_error(self) -> float | None:
        if self.u_closed_form.sign == 0:
            return None
        return abs(self.u_quadrature.value() / self.u_closed_form.value() - 1.0)

    @property
    def above_lower_bound(self) -> bool | None:
        if self.lower_bound is None or self.n % 2 == 1:
            return None
        return self.u_quadrature.sign > 0 and self.u_quadrature.log >= self.lower_bound - 1e-9 * max(1.0, abs(self.lower_bound))


class DivergenceReport(BaseModel):
    gamma: float = Field(description="Gaussian parameter γ.")
    rows: list[DivergenceRow] = Field(description="One row per n ≤ N_max.")
    verdict: DivergenceVerdict = Field(description="Diverges, HypothesisNotMet or Inconclusive.")

    def csv_rows(self) -> list[dict]:
        out = []
        for row in self.rows:
            rel = row.relative_error
            out.append(
                {
                    "n": row.n,
                    "u_sign": row.u_quadrature.sign,
                    "u_log10": row.u_quadrature.log10,
                    "closed_sign": row.u_closed_form.sign,
                    "closed_log10": row.u_closed_form.log10,
                    "printed_log10": row.u_printed_form.log10,
                    "lower_log10": "" if row.lower_bound is None else row.lower_bound / math.log(10.0),
                    "rel_err": "" if rel is None else rel,
                }
            )
        return out


def _verdict(gamma: float, rows: list[DivergenceRow]) -> DivergenceVerdict:
    if gamma <= 1.0:
        return DivergenceVerdict.HYPOTHESIS_NOT_MET
    even = [row for row in rows if row.n % 2 == 0 and row.n >= 2]
    if len(even) < 2:
        return DivergenceVerdict.INCONCLUSIVE
    increasing = all(b.u_quadrature.log > a.u_quadrature.log for a, b in zip(even, even[1:]))
    bounded = all(row.above_lower_bound for row in even)
    return DivergenceVerdict.DIVERGES if increasing and bounded else DivergenceVerdict.INCONCLUSIVE


def divergence_report(gamma: float, n_max: int) -> DivergenceReport:
    f = Gaussian(gamma=gamma, center=(0.0, 0.0))
    theta = symplectic(1.0)
    rows = [
        DivergenceRow(
            n=n,
            u_quadrature=u_term(f, f, theta, n),
            u_closed_form=prop1_closed_form(gamma, n),
            u_printed_form=prop1_printed_form(gamma, n),
            lower_bound=prop1_lower_bound(gamma, n),
        )
        for n in range(n_max + 1)
    ]
    verdict = _verdict(gamma, rows)
    _LOGGER.info("Divergence report gamma=%g, N=%d: %s", gamma, n_max, verdict.value)
    return DivergenceReport(gamma=gamma, rows=rows, verdict=verdict)
