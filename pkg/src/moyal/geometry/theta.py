import logging
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field, root_validator, validator

from moyal.errors import AntisymmetryViolation, DimensionMismatch, ThetaSingular

_LOGGER = logging.getLogger(__name__)


class ThetaMatrix(BaseModel):
    """Constant antisymmetric noncommutativity matrix θ^{μν}.

    The pairing ⟨p,θq⟩ = (1/2)θ^{μν}p_μq_ν and the operator q ↦ (1/2)θq are the
    only places where the factor 1/2 appears.
    """

    d: int = Field(description="Space dimension.")
    entries: np.ndarray = Field(description="d×d real antisymmetric matrix.")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("entries", pre=True)
    def _as_array(cls, value):
        return np.array(value, dtype=float)

    @root_validator(skip_on_failure=True)
    def _antisymmetric(cls, values):
        d, matrix = values["d"], values["entries"]
        if d < 1 or matrix.shape != (d, d):
            raise DimensionMismatch(f"theta entries must be {d}x{d}, got shape {matrix.shape}")
        defect = np.max(np.abs(matrix + matrix.T))
        if defect > 0:
            raise AntisymmetryViolation(f"theta is not antisymmetric: max|θ^μν + θ^νμ| = {defect:g}")
        return values

    def __hash__(self) -> int:
        return hash((self.d, self.entries.tobytes()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ThetaMatrix)
            and self.d == other.d
            and np.array_equal(self.entries, other.entries)
        )

    @property
    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def scaled(self, t: float) -> "ThetaMatrix":
        return ThetaMatrix(d=self.d, entries=t * self.entries)

    def symplectic_scale(self) -> float | None:
        """t when θ = t·(0 1; −1 0), otherwise None."""
        if self.d != 2:
            return None
        return float(self.entries[0, 1])


def make_theta(d: int, entries: Sequence[Sequence[float]]) -> ThetaMatrix:
    return ThetaMatrix(d=d, entries=entries)


def symplectic(t: float = 1.0) -> ThetaMatrix:
    return make_theta(2, [[0.0, t], [-t, 0.0]])


def zero_theta(d: int = 2) -> ThetaMatrix:
    return make_theta(d, np.zeros((d, d)))


def _check_vector(theta: ThetaMatrix, v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape[-1:] != (theta.d,):
        raise DimensionMismatch(f"{name} must have trailing length {theta.d}, got {arr.shape}")
    return arr


def apply_theta(theta: ThetaMatrix, q) -> np.ndarray:
    """Components (1/2)Σ_ν θ^{μν}q_ν; broadcasts over leading axes of q."""
    arr = _check_vector(theta, q, "q")
    return 0.5 * arr @ theta.entries.T


def pair(theta: ThetaMatrix, p, q) -> np.ndarray | float:
    """⟨p,θq⟩ = (1/2)Σ θ^{μν}p_μq_ν; broadcasts over leading axes."""
    p_arr = _check_vector(theta, p, "p")
    q_arr = _check_vector(theta, q, "q")
    value = np.sum(p_arr * apply_theta(theta, q_arr), axis=-1)
    return float(value) if np.ndim(value) == 0 else value


def theta_abs(theta: ThetaMatrix) -> float:
    return float(np.sum(np.abs(theta.entries)))


def scaled_operator(theta: ThetaMatrix) -> np.ndarray:
    return 0.5 * theta.entries


def scaled_determinant(theta: ThetaMatrix) -> float:
    """|det| of the operator q ↦ (1/2)θq."""
    return float(abs(np.linalg.det(scaled_operator(theta))))


def invert_theta(theta: ThetaMatrix) -> np.ndarray:
    """Inverse of the scaled operator (1/2)θ."""
    det = scaled_determinant(theta)
    if theta.d % 2 == 1 or det == 0.0 or not np.isfinite(det):
        raise ThetaSingular(f"theta is degenerate (|det θ/2| = {det:g})")
    _LOGGER.debug("Inverting theta with |det θ/2| = %g", det)
    return np.linalg.inv(scaled_operator(theta))


def degenerate(d: int = 2) -> ThetaMatrix:
    """Non-invertible θ: a unit symplectic block on the first two axes when d ≥ 3, zero otherwise."""
    entries = np.zeros((d, d))
    if d >= 3:
        entries[0, 1], entries[1, 0] = 1.0, -1.0
    return make_theta(d, entries)
