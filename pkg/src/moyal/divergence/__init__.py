from moyal.divergence.prop1 import (
    DivergenceReport,
    DivergenceRow,
    DivergenceVerdict,
    closed_form_ratio,
    divergence_report,
    prop1_closed_form,
    prop1_lower_bound,
    prop1_printed_form,
    u_functional,
    u_term,
)
from moyal.divergence.prop2 import Prop2Dominator, dominator_log_c, prop2_dominator

__all__ = [
    "DivergenceReport",
    "DivergenceRow",
    "DivergenceVerdict",
    "Prop2Dominator",
    "closed_form_ratio",
    "divergence_report",
    "dominator_log_c",
    "prop1_closed_form",
    "prop1_lower_bound",
    "prop1_printed_form",
    "prop2_dominator",
    "u_functional",
    "u_term",
]
