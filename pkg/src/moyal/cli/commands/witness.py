import argparse
from typing import Any, ClassVar

import voluptuous as vol

from moyal.cli.commands.base import Command, CommandResult
from moyal.cli.output import write_json, write_rows
from moyal.cli.schemas import WITNESS_SCHEMA
from moyal.const import WITNESS_NODES
from moyal.errors import DominationFailed
from moyal.witness import witness_report


class WitnessCommand(Command):
    name: ClassVar[str] = "witness"
    description: ClassVar[str] = "Domination and moment checks of the witness ĝ."
    args_schema: ClassVar[vol.Schema] = WITNESS_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--beta", type=float, required=True, help="Index β.")
        parser.add_argument("--nlist", help="Comma-separated moment orders, default 2,4,6.")
        parser.add_argument("--s-max", type=float, help="Half-width of the domination grid.")
        parser.add_argument("--nodes", type=int, help="Nodes of the domination grid.")

    def _run(self, params: dict[str, Any]) -> CommandResult:
        report = witness_report(params["beta"], params["nlist"], s_max=params["s_max"], nodes=params["nodes"] or WITNESS_NODES)
        rows = [
            {
                "n": row.n,
                "moment_log": row.moment.log,
                "envelope_log": row.envelope_log,
                "required_log": row.required_log,
                "passed": row.passed,
            }
            for row in report.rows
        ]
        prefix = params["out"]
        outputs = [write_json(f"{prefix}.json", report.dict()), write_rows(f"{prefix}.csv", rows)]
        if not report.passed:
            raise DominationFailed(
                f"witness for beta={report.beta:g} fails: domination margin {report.min_log_margin:.3g}, "
                f"moments {'pass' if report.moments_passed else 'fail'}"
            )
        summary = {
            "passed": report.passed,
            "min_log_margin": report.min_log_margin,
            "amplitude": report.amplitude,
            "dilation": report.dilation,
        }
        return CommandResult(outputs=outputs, summary=summary)
