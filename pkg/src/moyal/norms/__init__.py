from moyal.norms.gs import (
    DerivativeTable,
    GSParams,
    first_decreasing_index,
    gs_norm_estimate,
    multi_indices,
    schwartz_norm,
    term_norm_bound,
)
from moyal.norms.report import (
    ConvergenceReport,
    ScaleChoice,
    TermReport,
    Verdict,
    convergence_report,
    merged_scales,
    tail_verdict,
)

__all__ = [
    "ConvergenceReport",
    "DerivativeTable",
    "GSParams",
    "ScaleChoice",
    "TermReport",
    "Verdict",
    "convergence_report",
    "first_decreasing_index",
    "gs_norm_estimate",
    "merged_scales",
    "multi_indices",
    "schwartz_norm",
    "tail_verdict",
    "term_norm_bound",
]
