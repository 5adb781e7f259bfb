import logging
from typing import ClassVar, Union

from pydantic import BaseModel

from moyal.atlas import AnalyticFunction
from moyal.errors import DimensionMismatch, GridMismatch
from moyal.geometry import ThetaMatrix
from moyal.grids import GridSpec, SampledField, Space, dft_forward, dft_inverse, sample

_LOGGER = logging.getLogger(__name__)

Operand = Union[AnalyticFunction, SampledField]


def operand_dimension(operand: Operand) -> int:
    return operand.spec.d if isinstance(operand, SampledField) else operand.d


def _check_grid(operand: SampledField, spec: GridSpec) -> None:
    if operand.spec != spec:
        raise GridMismatch(f"field sampled on {operand.spec} cannot be used on grid {spec}")


def momentum_samples(operand: Operand, spec: GridSpec) -> SampledField:
    """Momentum samples on spec: exact for atlas functions, DFT for position fields."""
    if isinstance(operand, AnalyticFunction):
        return sample(operand, spec, Space.MOMENTUM)
    _check_grid(operand, spec)
    return operand if operand.space == Space.MOMENTUM else dft_forward(operand)


def position_samples(operand: Operand, spec: GridSpec) -> SampledField:
    if isinstance(operand, AnalyticFunction):
        return sample(operand, spec, Space.POSITION)
    _check_grid(operand, spec)
    return operand if operand.space == Space.POSITION else dft_inverse(operand)


class StarAlgorithm(BaseModel):
    """One way of computing (f×g) on a grid."""

    name: ClassVar[str] = "abstract"
    description: ClassVar[str] = ""

    class Config:
        allow_mutation = False

    def run(self, f: Operand, g: Operand, theta: ThetaMatrix, spec: GridSpec) -> SampledField:
        dims = {operand_dimension(f), operand_dimension(g), theta.d, spec.d}
        if len(dims) != 1:
            raise DimensionMismatch(
                f"operands have d={operand_dimension(f)} and d={operand_dimension(g)}, "
                f"theta d={theta.d}, grid d={spec.d}"
            )
        _LOGGER.debug("Running %s on n=%d, L=%g", self.name, spec.n, spec.L)
        return self._run(f, g, theta, spec)

    def _run(self, f: Operand, g: Operand, theta: ThetaMatrix, spec: GridSpec) -> SampledField:
        raise NotImplementedError
