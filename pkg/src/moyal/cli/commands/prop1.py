import argparse
from typing import Any, ClassVar

import voluptuous as vol

from moyal.cli.commands.base import Command, CommandResult
from moyal.cli.output import write_rows
from moyal.cli.schemas import PROP1_SCHEMA
from moyal.divergence import closed_form_ratio, divergence_report


class Prop1Command(Command):
    name: ClassVar[str] = "prop1"
    description: ClassVar[str] = "u(h_n) for a Gaussian pair against the closed form and its lower bound."
    args_schema: ClassVar[vol.Schema] = PROP1_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--gamma", type=float, required=True, help="Gaussian parameter γ.")
        parser.add_argument("--nmax", type=int, help="Largest series order.")

    def _run(self, params: dict[str, Any]) -> CommandResult:
        gamma, n_max = params["gamma"], params["nmax"]
        report = divergence_report(gamma, n_max)
        outputs = [write_rows(f"{params['out']}.csv", report.csv_rows())]
        errors = [row.relative_error for row in report.rows if row.relative_error is not None]
        summary = {
            "verdict": report.verdict.value,
            "max_rel_err": max(errors, default=None),
            "closed_form_ratios": {n: closed_form_ratio(gamma, n) for n in range(0, n_max + 1, 2)},
        }
        return CommandResult(outputs=outputs, summary=summary)
