import argparse
from typing import Any, ClassVar

import voluptuous as vol

from moyal.bounds import continuity_experiment
from moyal.cli.commands.base import Command, CommandResult, grid_from
from moyal.cli.output import write_rows
from moyal.cli.presets import resolve_function
from moyal.cli.schemas import CONTINUITY_SCHEMA
from moyal.geometry import symplectic, zero_theta
from moyal.star import Algorithm, StarConfig


class ContinuityCommand(Command):
    name: ClassVar[str] = "continuity"
    description: ClassVar[str] = "Sup and L² distance of f×_θ g from fg along a θ sweep."
    args_schema: ClassVar[vol.Schema] = CONTINUITY_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--preset", help="Function preset used for f and g, default gauss1.")
        parser.add_argument("--thetas", required=True, help="Comma-separated θ_abs values; 0 adds the θ = 0 row.")
        parser.add_argument("--algo", choices=[a.value for a in Algorithm], help="Twisted-product algorithm.")
        parser.add_argument("--grid", help="Grid as N,L.")

    def _run(self, params: dict[str, Any]) -> CommandResult:
        f = resolve_function(params["preset"])
        spec = grid_from(params, f.d)
        # θ_abs of t·(0 1; −1 0) is 2t
        thetas = [zero_theta(f.d) if size == 0 else symplectic(size / 2.0) for size in params["thetas"]]
        cfg = StarConfig(algorithm=Algorithm(params["algo"]), spec=spec)
        table = continuity_experiment(f, f, thetas, cfg)
        outputs = [write_rows(f"{params['out']}.csv", table.csv_rows())]
        return CommandResult(outputs=outputs, summary={"slope": table.slope})
