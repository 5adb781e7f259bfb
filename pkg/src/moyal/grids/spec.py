import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, Field, root_validator

from moyal.const import MIN_GRID_N
from moyal.errors import GridMismatch


class Space(str, Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


class GridSpec(BaseModel):
    """Uniform grid covering [−L, L) per axis; x = 0 is the node with index n/2."""

    d: int = Field(description="Dimension.")
    n: int = Field(description="Points per axis, a power of two.")
    L: float = Field(description="Half-extent of the position grid.")

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check(cls, values):
        n, d, half = values["n"], values["d"], values["L"]
        if n < MIN_GRID_N or n & (n - 1):
            raise ValueError(f"grid n must be a power of two >= {MIN_GRID_N}, got {n}")
        if d < 1:
            raise ValueError(f"grid dimension must be positive, got {d}")
        if not half > 0:
            raise ValueError(f"grid half-extent must be positive, got {half}")
        return values

    def __hash__(self) -> int:
        return hash((self.d, self.n, self.L))

    @property
    def dx(self) -> float:
        return 2.0 * self.L / self.n

    @property
    def dp(self) -> float:
        return math.pi / self.L

    @property
    def P(self) -> float:
        return math.pi / self.dx

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.d

    @property
    def origin_index(self) -> int:
        return self.n // 2

    def axis(self, space: Space = Space.POSITION) -> np.ndarray:
        j = np.arange(self.n, dtype=float)
        if space == Space.POSITION:
            return -self.L + j * self.dx
        return -self.P + j * self.dp

    def nodes(self, space: Space = Space.POSITION) -> np.ndarray:
        """Array of shape (n,)*d + (d,) holding node coordinates."""
        axis = self.axis(space)
        mesh = np.meshgrid(*([axis] * self.d), indexing="ij")
        return np.stack(mesh, axis=-1)

    def measure(self, space: Space = Space.POSITION) -> float:
        step = self.dx if space == Space.POSITION else self.dp
        return step**self.d

    def radius(self, space: Space = Space.POSITION) -> np.ndarray:
        return np.linalg.norm(self.nodes(space), axis=-1)


def make_grid(d: int = 2, n: int = 128, L: float = 10.0) -> GridSpec:
    try:
        return GridSpec(d=d, n=n, L=L)
    except ValueError as err:
        raise GridMismatch(str(err)) from err


class SampledField(BaseModel):
    spec: GridSpec = Field(description="Grid the samples live on.")
    space: Space = Field(description="Position or momentum samples.")
    data: np.ndarray = Field(description="Complex samples of shape (n,)*d, axis order x1..xd.")

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check_shape(cls, values):
        data = np.asarray(values["data"], dtype=complex)
        if data.shape != values["spec"].shape:
            raise ValueError(
                f"field data must have shape {values['spec'].shape}, got {data.shape}"
            )
        values["data"] = data
        return values

    def with_data(self, data: np.ndarray) -> "SampledField":
        return SampledField(spec=self.spec, space=self.space, data=data)

    def __add__(self, other: "SampledField") -> "SampledField":
        require_same_grid(self, other)
        return self.with_data(self.data + other.data)

    def __sub__(self, other: "SampledField") -> "SampledField":
        require_same_grid(self, other)
        return self.with_data(self.data - other.data)

    def scale(self, c: complex) -> "SampledField":
        return self.with_data(c * self.data)

    def value_at_origin(self) -> complex:
        return complex(self.data[(self.spec.origin_index,) * self.spec.d])


def require_same_grid(a: SampledField, b: SampledField) -> None:
    if a.spec != b.spec or a.space != b.space:
        raise GridMismatch(
            f"fields live on different grids: {a.spec}/{a.space.value} vs {b.spec}/{b.space.value}"
        )
