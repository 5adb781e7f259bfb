"""Named inputs pinned for reproducible runs."""

import json
import logging
from pathlib import Path

import numpy as np

from moyal.atlas import AnalyticFunction, from_descriptor
from moyal.errors import DescriptorInvalid
from moyal.geometry import ThetaMatrix, degenerate, make_theta, symplectic, zero_theta
from moyal.norms import GSParams

_LOGGER = logging.getLogger(__name__)

FUNCTION_PRESETS: dict[str, dict] = {
    "gauss1": {"family": "gaussian", "d": 2, "params": {"gamma": 1.0, "center": [0.0, 0.0]}},
    "gauss2": {"family": "gaussian", "d": 2, "params": {"gamma": 2.0, "center": [0.0, 0.0]}},
    "bump": {"family": "bump_fourier", "d": 2, "params": {"radius": 2.0}},
    "hermite01": {"family": "hermite_gaussian", "d": 2, "params": {"gamma": 1.0, "orders": [0, 1]}},
    "appendix-beta2": {"family": "appendix_ghat", "d": 1, "params": {"beta": 2.0}},
}

# (α, β, A, B) at which each preset is measured by the series command
GS_PRESETS: dict[str, GSParams] = {
    "gauss1": GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=2),
    "gauss2": GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=2),
    "bump": GSParams(alpha=2.0, beta=0.0, A=1.0, B=2.0, k_max=2),
    "hermite01": GSParams(alpha=0.5, beta=0.5, A=2.0, B=4.0, k_max=2),
}

THETA_PRESETS = ("symplectic2", "zero", "degenerate")


def resolve_function(text: str) -> AnalyticFunction:
    """A preset name, a JSON descriptor, or a path to a JSON descriptor file."""
    if text in FUNCTION_PRESETS:
        return from_descriptor(FUNCTION_PRESETS[text])
    path = Path(text)
    if path.suffix == ".json" and path.is_file():
        text = path.read_text()
    try:
        descriptor = json.loads(text)
    except json.JSONDecodeError as err:
        raise DescriptorInvalid(
            f"'{text}' is neither a preset ({', '.join(FUNCTION_PRESETS)}) nor a JSON descriptor"
        ) from err
    return from_descriptor(descriptor)


def resolve_theta(name: str, scale: float = 1.0, d: int = 2) -> ThetaMatrix:
    if name == "symplectic2":
        return symplectic(scale)
    if name == "zero":
        return zero_theta(d)
    if name == "degenerate":
        return degenerate(d)
    path = Path(name)
    if not path.is_file():
        raise DescriptorInvalid(f"theta must be one of {THETA_PRESETS} or a matrix file, got '{name}'")
    entries = np.array(json.loads(path.read_text()), dtype=float)
    _LOGGER.debug("Loaded theta from %s", path)
    return make_theta(entries.shape[0], scale * entries)
