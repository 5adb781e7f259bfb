import argparse
import logging
from pathlib import Path
from typing import Any, ClassVar

import voluptuous as vol
from pydantic import BaseModel

from moyal.cli.manifest import ManifestTimer, RunManifest, write_manifest
from moyal.errors import DescriptorInvalid
from moyal.grids import GridSpec, make_grid

_LOGGER = logging.getLogger(__name__)


class CommandResult(BaseModel):
    outputs: list[Path]
    summary: dict[str, Any]
    seed: int | None = None


class Command(BaseModel):
    """One CLI subcommand: flags, a voluptuous schema and a `_run` on validated parameters."""

    name: ClassVar[str] = "abstract"
    description: ClassVar[str] = ""
    args_schema: ClassVar[vol.Schema]

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--out", required=True, help="Prefix of the files written by the run.")

    def validate(self, args: dict[str, Any]) -> dict[str, Any]:
        present = {key: value for key, value in args.items() if value is not None and key != "command"}
        try:
            return self.args_schema(present)
        except vol.Invalid as err:
            raise DescriptorInvalid(f"invalid arguments for '{self.name}': {err}") from err

    def run(self, args: dict[str, Any]) -> RunManifest:
        params = self.validate(args)
        timer = ManifestTimer(self.name, params)
        result = self._run(params)
        manifest = timer.finish(result.outputs, result.summary, result.seed)
        write_manifest(manifest, params["out"])
        return manifest

    def _run(self, params: dict[str, Any]) -> CommandResult:
        raise NotImplementedError


def grid_from(params: dict[str, Any], d: int = 2) -> GridSpec:
    n, half = params["grid"]
    return make_grid(d, n, half)
