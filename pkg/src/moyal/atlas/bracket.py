import numpy as np

from moyal.atlas.base import AnalyticFunction, evaluate_derivative, unit
from moyal.errors import DimensionMismatch
from moyal.geometry import ThetaMatrix


def poisson_bracket(f: AnalyticFunction, g: AnalyticFunction, theta: ThetaMatrix, x) -> complex:
    """{f,g}(x) = θ^{μν}∂_μf ∂_νg(x), so that the first Moyal term is (i/2){f,g}."""
    if not f.d == g.d == theta.d:
        raise DimensionMismatch(f"bracket of d={f.d} and d={g.d} functions under a d={theta.d} theta")
    d = theta.d
    df = [evaluate_derivative(f, unit(d, mu), x).value for mu in range(d)]
    dg = [evaluate_derivative(g, unit(d, nu), x).value for nu in range(d)]
    return complex(np.asarray(df) @ theta.entries @ np.asarray(dg))
