from moyal.witness.appendix import (
    GHatTable,
    MomentRow,
    OmegaTable,
    WitnessReport,
    build_g_hat,
    build_omega,
    log_g_hat,
    moment_lower_bound_check,
    tail_half_width,
    witness_report,
)

__all__ = [
    "GHatTable",
    "MomentRow",
    "OmegaTable",
    "WitnessReport",
    "build_g_hat",
    "build_omega",
    "log_g_hat",
    "moment_lower_bound_check",
    "tail_half_width",
    "witness_report",
]
