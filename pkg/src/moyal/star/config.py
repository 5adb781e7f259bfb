from enum import Enum

from pydantic import BaseModel, Field, validator

from moyal.const import DIRECT_REFINE, N_CAP
from moyal.grids import GridSpec


class Algorithm(str, Enum):
    TENSOR = "tensor"
    SHIFT = "shift"
    DIRECT = "direct"


class StarConfig(BaseModel):
    algorithm: Algorithm = Field(Algorithm.SHIFT, description="Which twisted-product algorithm to run.")
    spec: GridSpec = Field(description="Output grid.")
    n_max: int = Field(N_CAP, description="Cap on the Moyal series order.")
    refine: int = Field(DIRECT_REFINE, description="Quadrature refinement of the direct algorithm.")

    class Config:
        allow_mutation = False

    @validator("n_max", "refine")
    def _positive(cls, value):
        if value < 1:
            raise ValueError(f"must be positive, got {value}")
        return value
