import argparse
import logging
from typing import Any, ClassVar

import numpy as np
import voluptuous as vol

from moyal.cli.commands.base import Command, CommandResult, grid_from
from moyal.cli.presets import FUNCTION_PRESETS, THETA_PRESETS, resolve_function, resolve_theta
from moyal.cli.schemas import STAR_SCHEMA
from moyal.const import ZERO_THETA_TOLERANCE
from moyal.errors import DescriptorInvalid, PointwiseMismatch
from moyal.grids import dump_field, export_csv, sample
from moyal.star import Algorithm, StarConfig, twisted_product

_LOGGER = logging.getLogger(__name__)


class StarCommand(Command):
    name: ClassVar[str] = "star"
    description: ClassVar[str] = "Twisted product f×g on a grid."
    args_schema: ClassVar[vol.Schema] = STAR_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--preset", help=f"Use the same preset for f and g: {', '.join(FUNCTION_PRESETS)}.")
        parser.add_argument("--f", help="Preset name, JSON descriptor or descriptor file for f.")
        parser.add_argument("--g", help="Preset name, JSON descriptor or descriptor file for g.")
        parser.add_argument("--theta", required=True, help=f"One of {', '.join(THETA_PRESETS)} or a JSON matrix file.")
        parser.add_argument("--scale", type=float, help="Scale t of the theta preset.")
        parser.add_argument("--algo", choices=[a.value for a in Algorithm], help="Twisted-product algorithm.")
        parser.add_argument("--grid", help="Grid as N,L.")

    def _run(self, params: dict[str, Any]) -> CommandResult:
        f_text = params["f"] or params["preset"]
        g_text = params["g"] or params["preset"] or f_text
        if f_text is None:
            raise DescriptorInvalid("star needs --preset or --f")
        f, g = resolve_function(f_text), resolve_function(g_text)
        spec = grid_from(params, f.d)
        theta = resolve_theta(params["theta"], params["scale"], f.d)
        cfg = StarConfig(algorithm=Algorithm(params["algo"]), spec=spec)

        field = twisted_product(f, g, theta, cfg)
        prefix = params["out"]
        outputs = [dump_field(field, f"{prefix}.field"), export_csv(field, f"{prefix}.csv")]
        summary: dict[str, Any] = {"algorithm": cfg.algorithm.value, "value_at_origin": str(field.value_at_origin())}
        if theta.is_zero:
            pointwise = sample(f, spec).data * sample(g, spec).data
            deviation = float(np.max(np.abs(field.data - pointwise)))
            summary["zero_theta_sup_deviation"] = deviation
            if deviation > ZERO_THETA_TOLERANCE:
                raise PointwiseMismatch(f"theta=0 product deviates from f·g by {deviation:.3g} on the grid")
        _LOGGER.info("Twisted product written with prefix %s", prefix)
        return CommandResult(outputs=outputs, summary=summary)
