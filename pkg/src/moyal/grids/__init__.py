from moyal.grids.io import dump_field, export_csv, read_field
from moyal.grids.sampling import SampledDerivative, sample, sample_derivative
from moyal.grids.spec import GridSpec, SampledField, Space, make_grid, require_same_grid
from moyal.grids.transforms import (
    NormKind,
    check_tail,
    dft_forward,
    dft_inverse,
    field_norm,
    relative_l2,
    spectral_derivative,
)

__all__ = [
    "GridSpec",
    "NormKind",
    "SampledDerivative",
    "SampledField",
    "Space",
    "check_tail",
    "dft_forward",
    "dft_inverse",
    "dump_field",
    "export_csv",
    "field_norm",
    "make_grid",
    "read_field",
    "relative_l2",
    "require_same_grid",
    "sample",
    "sample_derivative",
    "spectral_derivative",
]
