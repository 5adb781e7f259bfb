import argparse
import logging
from typing import Any, ClassVar

import voluptuous as vol

from moyal.cli.commands.base import Command, CommandResult, grid_from
from moyal.cli.output import write_rows
from moyal.cli.presets import GS_PRESETS, resolve_function, resolve_theta
from moyal.cli.schemas import SERIES_SCHEMA
from moyal.norms import GSParams, convergence_report
from moyal.geometry import theta_abs

_LOGGER = logging.getLogger(__name__)

FAMILY_ALIASES = {"gaussian": "gauss1"}


class SeriesCommand(Command):
    name: ClassVar[str] = "series"
    description: ClassVar[str] = "Term norms of the Moyal series against the absolutely convergent bound."
    args_schema: ClassVar[vol.Schema] = SERIES_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--family", required=True, help="Preset (bump, gauss1, gauss2, hermite01) or descriptor for f.")
        parser.add_argument("--g", help="Second factor, defaults to f.")
        parser.add_argument("--theta", help="Theta preset or matrix file, default symplectic2.")
        parser.add_argument("--scale", type=float, help="Scale t of the theta preset.")
        parser.add_argument("--nmax", type=int, help="Largest series order.")
        parser.add_argument("--kmax", type=int, help="Largest derivative order in the term norms.")
        parser.add_argument("--alpha", type=float, help="Decay index α.")
        parser.add_argument("--beta", type=float, help="Smoothness index β.")
        parser.add_argument("--A", type=float, help="Decay scale A.")
        parser.add_argument("--B", type=float, help="Derivative scale B.")
        parser.add_argument("--grid", help="Grid as N,L.")

    def _params(self, family: str, params: dict[str, Any]) -> GSParams:
        base = GS_PRESETS.get(family, GSParams(alpha=0.5, beta=0.5, A=1.0, B=1.0, k_max=2))
        values = base.dict()
        for key, target in (("alpha", "alpha"), ("beta", "beta"), ("A", "A"), ("B", "B"), ("kmax", "k_max")):
            if params.get(key) is not None:
                values[target] = params[key]
        return GSParams(**values)

    def _run(self, params: dict[str, Any]) -> CommandResult:
        family = FAMILY_ALIASES.get(params["family"], params["family"])
        f = resolve_function(family)
        g = resolve_function(params["g"]) if params["g"] else f
        spec = grid_from(params, f.d)
        theta = resolve_theta(params["theta"], params["scale"], f.d)
        gs = self._params(family, params)

        report = convergence_report(f, g, theta, gs, spec, params["nmax"])
        prefix = params["out"]
        outputs = [write_rows(f"{prefix}.csv", report.csv_rows())]
        summary = {
            "verdict": report.verdict.value,
            "u_verdict": report.u_verdict and report.u_verdict.value,
            "all_within_bound": report.all_within_bound,
            "theta_abs": theta_abs(theta),
            "gs_params": gs.dict(),
            "scales": report.scales.dict(),
            "scale_choice": "lattice minimisation of the summed term bound",
        }
        return CommandResult(outputs=outputs, summary=summary)
