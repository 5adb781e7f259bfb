import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

from moyal.cli.output import write_json
from moyal.const import MANIFEST_SCHEMA_VERSION, VERSION


class RunManifest(BaseModel):
    schema_version: int = Field(MANIFEST_SCHEMA_VERSION, description="Version of this manifest layout.")
    command: str = Field(description="CLI command that produced the run.")
    parameters: dict[str, Any] = Field(description="Validated parameter set.")
    seed: int | None = Field(None, description="PRNG seed, if the command samples.")
    version: str = Field(VERSION, description="moyal version.")
    outputs: list[str] = Field(default_factory=list, description="Data files written by the run.")
    summary: dict[str, Any] = Field(default_factory=dict, description="Verdicts and headline numbers.")
    started_at: str = Field(description="UTC start time, ISO 8601.")
    wall_clock: float = Field(0.0, description="Seconds spent in the run.")


class ManifestTimer:
    def __init__(self, command: str, parameters: dict[str, Any]):
        self.command = command
        self.parameters = parameters
        self.started_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
        self._start = time.perf_counter()

    def finish(self, outputs: list[Path], summary: dict[str, Any], seed: int | None = None) -> RunManifest:
        return RunManifest(
            command=self.command,
            parameters=self.parameters,
            seed=seed,
            outputs=[str(path) for path in outputs],
            summary=summary,
            started_at=self.started_at,
            wall_clock=time.perf_counter() - self._start,
        )


def write_manifest(manifest: RunManifest, prefix: str | Path) -> Path:
    return write_json(f"{prefix}.manifest.json", manifest.dict())
