from moyal.geometry.theta import (
    ThetaMatrix,
    apply_theta,
    degenerate,
    invert_theta,
    make_theta,
    pair,
    scaled_determinant,
    scaled_operator,
    symplectic,
    theta_abs,
    zero_theta,
)

__all__ = [
    "ThetaMatrix",
    "apply_theta",
    "degenerate",
    "invert_theta",
    "make_theta",
    "pair",
    "scaled_determinant",
    "scaled_operator",
    "symplectic",
    "theta_abs",
    "zero_theta",
]
