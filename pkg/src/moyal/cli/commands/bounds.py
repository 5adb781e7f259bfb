import argparse
import logging
from typing import Any, ClassVar

import voluptuous as vol

from moyal.bounds import certificate_summary, multiplier_certificate, revalidate
from moyal.cli.commands.base import Command, CommandResult
from moyal.cli.output import write_json
from moyal.cli.presets import resolve_theta
from moyal.cli.schemas import BOUNDS_SCHEMA
from moyal.errors import CertificateNotFound

_LOGGER = logging.getLogger(__name__)


class BoundsCommand(Command):
    name: ClassVar[str] = "bounds"
    description: ClassVar[str] = "Sampled multiplier certificate for the twist phase, revalidated on a fresh seed."
    args_schema: ClassVar[vol.Schema] = BOUNDS_SCHEMA

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--alpha", type=float, required=True, help="Derivative-growth index α.")
        parser.add_argument("--beta", type=float, required=True, help="Weight index β.")
        parser.add_argument("--epsilon", type=float, help="ε of the exponential weight.")
        parser.add_argument("--kappa-max", type=int, help="Largest derivative order.")
        parser.add_argument("--samples", type=int, help="Sample size.")
        parser.add_argument("--seed", type=int, help="Seed of the first sample; the fresh sample uses seed+1.")
        parser.add_argument("--theta", help="Theta preset or matrix file, default symplectic2.")
        parser.add_argument("--scale", type=float, help="Scale t of the theta preset.")

    def _run(self, params: dict[str, Any]) -> CommandResult:
        theta = resolve_theta(params["theta"], params["scale"])
        certificate = multiplier_certificate(
            theta,
            params["alpha"],
            params["beta"],
            params["epsilon"],
            params["kappa_max"],
            params["samples"],
            params["seed"],
        )
        check = revalidate(theta, certificate, params["seed"] + 1)
        outputs = [write_json(f"{params['out']}.json", certificate_summary(certificate, check))]
        if check.violations:
            raise CertificateNotFound(f"certificate fails on {check.violations} points of the fresh sample")
        summary = {"C_eps": certificate.C_eps, "A_eps": certificate.A_eps, "violations": check.violations}
        return CommandResult(outputs=outputs, summary=summary, seed=params["seed"])
