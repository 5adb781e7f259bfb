import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Iterable

from moyal.grids.io import atomic_write

_LOGGER = logging.getLogger(__name__)


def write_rows(path: str | Path, rows: Iterable[dict[str, Any]]) -> Path:
    """Long-format CSV with a header row taken from the first row's keys."""
    rows = list(rows)
    buffer = io.StringIO()
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: repr(value) if isinstance(value, float) else value for key, value in row.items()})
    written = atomic_write(path, buffer.getvalue())
    _LOGGER.info("Wrote %d rows to %s", len(rows), written)
    return written


def write_json(path: str | Path, payload: Any) -> Path:
    written = atomic_write(path, json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
    _LOGGER.info("Wrote %s", written)
    return written
