from moyal.bounds.cauchy import RadiusBranch, cauchy_bound, optimal_r
from moyal.bounds.certificate import (
    MultiplierCertificate,
    RevalidationResult,
    WorstPoint,
    certificate_summary,
    multiplier_certificate,
    revalidate,
)
from moyal.bounds.continuity import (
    BoundCheck,
    ContinuityRow,
    ContinuityTable,
    chi_bound_check,
    continuity_experiment,
    difference_bound_check,
)
from moyal.bounds.phase import (
    PhasePoint,
    envelope_coefficients,
    evaluate_polynomial,
    make_point,
    phase,
    phase_derivative_exact,
    phase_polynomial,
    sample_points,
)

__all__ = [
    "BoundCheck",
    "ContinuityRow",
    "ContinuityTable",
    "MultiplierCertificate",
    "PhasePoint",
    "RadiusBranch",
    "RevalidationResult",
    "WorstPoint",
    "cauchy_bound",
    "certificate_summary",
    "chi_bound_check",
    "continuity_experiment",
    "difference_bound_check",
    "envelope_coefficients",
    "evaluate_polynomial",
    "make_point",
    "multiplier_certificate",
    "optimal_r",
    "phase",
    "phase_derivative_exact",
    "phase_polynomial",
    "sample_points",
]
