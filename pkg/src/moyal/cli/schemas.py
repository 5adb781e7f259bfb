"""voluptuous schemas for the argument dictionaries of each command."""

import voluptuous as vol

from moyal.const import DEFAULT_GRID_L, DEFAULT_GRID_N, N_CAP, PHASE_ORDER_CAP
from moyal.star import Algorithm


def grid_pair(value) -> tuple[int, float]:
    """Parse "N,L" into (N, L)."""
    if isinstance(value, (tuple, list)):
        parts = list(value)
    else:
        parts = str(value).split(",")
    if len(parts) != 2:
        raise vol.Invalid(f"grid must be given as N,L, got '{value}'")
    try:
        return int(parts[0]), float(parts[1])
    except ValueError as err:
        raise vol.Invalid(f"grid must be given as N,L, got '{value}'") from err


def float_list(value) -> list[float]:
    if isinstance(value, (tuple, list)):
        return [float(v) for v in value]
    try:
        return [float(v) for v in str(value).split(",") if v.strip()]
    except ValueError as err:
        raise vol.Invalid(f"expected a comma-separated list of numbers, got '{value}'") from err


def int_list(value) -> list[int]:
    return [int(v) for v in float_list(value)]


_positive = vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False))
_non_negative = vol.All(vol.Coerce(float), vol.Range(min=0))
_grid = vol.All(grid_pair)
_algo = vol.All(str, vol.In([a.value for a in Algorithm]))

COMMON = {
    vol.Required("out"): str,
}

STAR_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Optional("preset", default=None): vol.Any(None, str),
        vol.Optional("f", default=None): vol.Any(None, str),
        vol.Optional("g", default=None): vol.Any(None, str),
        vol.Required("theta"): str,
        vol.Optional("scale", default=1.0): vol.Coerce(float),
        vol.Optional("algo", default=Algorithm.SHIFT.value): _algo,
        vol.Optional("grid", default=(DEFAULT_GRID_N, DEFAULT_GRID_L)): _grid,
    }
)

SERIES_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Required("family"): str,
        vol.Optional("g", default=None): vol.Any(None, str),
        vol.Optional("theta", default="symplectic2"): str,
        vol.Optional("scale", default=1.0): vol.Coerce(float),
        vol.Optional("nmax", default=N_CAP): vol.All(vol.Coerce(int), vol.Range(min=0, max=N_CAP)),
        vol.Optional("kmax", default=None): vol.Any(None, vol.All(vol.Coerce(int), vol.Range(min=0))),
        vol.Optional("alpha", default=None): vol.Any(None, _non_negative),
        vol.Optional("beta", default=None): vol.Any(None, _non_negative),
        vol.Optional("A", default=None): vol.Any(None, _positive),
        vol.Optional("B", default=None): vol.Any(None, _positive),
        vol.Optional("grid", default=(DEFAULT_GRID_N, DEFAULT_GRID_L)): _grid,
    }
)

PROP1_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Required("gamma"): _positive,
        vol.Optional("nmax", default=10): vol.All(vol.Coerce(int), vol.Range(min=0, max=N_CAP)),
    }
)

BOUNDS_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Required("alpha"): _positive,
        vol.Required("beta"): _positive,
        vol.Optional("epsilon", default=0.5): _positive,
        vol.Optional("kappa_max", default=4): vol.All(vol.Coerce(int), vol.Range(min=0, max=PHASE_ORDER_CAP)),
        vol.Optional("samples", default=1000): vol.All(vol.Coerce(int), vol.Range(min=1)),
        vol.Optional("seed", default=0): vol.Coerce(int),
        vol.Optional("theta", default="symplectic2"): str,
        vol.Optional("scale", default=1.0): vol.Coerce(float),
    }
)

CONTINUITY_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Optional("preset", default="gauss1"): str,
        vol.Required("thetas"): vol.All(float_list, vol.Length(min=1)),
        vol.Optional("algo", default=Algorithm.SHIFT.value): _algo,
        vol.Optional("grid", default=(DEFAULT_GRID_N, DEFAULT_GRID_L)): _grid,
    }
)

WITNESS_SCHEMA = vol.Schema(
    {
        **COMMON,
        vol.Required("beta"): _positive,
        vol.Optional("nlist", default=[2, 4, 6]): vol.All(int_list, vol.Length(min=1)),
        vol.Optional("s_max", default=None): vol.Any(None, _positive),
        vol.Optional("nodes", default=None): vol.Any(None, vol.All(vol.Coerce(int), vol.Range(min=3))),
    }
)
