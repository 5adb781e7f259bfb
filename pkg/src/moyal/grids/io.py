"""Field dumps: a little-endian header followed by interleaved re/im doubles, plus CSV."""

import csv
import logging
import os
import struct
import tempfile
from pathlib import Path

import numpy as np

from moyal.errors import GridMismatch
from moyal.grids.spec import GridSpec, SampledField, Space

_LOGGER = logging.getLogger(__name__)

MAGIC = b"MOYL"
FORMAT_VERSION = 1
# magic, version, d, n, L, space tag
HEADER = struct.Struct("<4sIIIdB")
SPACE_TAGS = {Space.POSITION: 0, Space.MOMENTUM: 1}


def atomic_write(path: str | Path, payload: bytes | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(payload, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, mode) as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
    return path


def encode_field(field: SampledField) -> bytes:
    spec = field.spec
    header = HEADER.pack(MAGIC, FORMAT_VERSION, spec.d, spec.n, spec.L, SPACE_TAGS[field.space])
    return header + np.ascontiguousarray(field.data, dtype="<c16").tobytes()


def decode_field(payload: bytes) -> SampledField:
    if len(payload) < HEADER.size:
        raise GridMismatch("field dump is shorter than its header")
    magic, version, d, n, half, tag = HEADER.unpack_from(payload)
    if magic != MAGIC or version != FORMAT_VERSION:
        raise GridMismatch(f"not a field dump (magic {magic!r}, version {version})")
    spaces = {value: key for key, value in SPACE_TAGS.items()}
    if tag not in spaces:
        raise GridMismatch(f"unknown space tag {tag}")
    spec = GridSpec(d=d, n=n, L=half)
    body = np.frombuffer(payload, dtype="<c16", offset=HEADER.size)
    if body.size != n**d:
        raise GridMismatch(f"field dump holds {body.size} values, header promises {n**d}")
    return SampledField(spec=spec, space=spaces[tag], data=body.reshape(spec.shape).astype(complex))


def dump_field(field: SampledField, path: str | Path) -> Path:
    _LOGGER.debug("Writing %s field on n=%d to %s", field.space.value, field.spec.n, path)
    return atomic_write(path, encode_field(field))


def read_field(path: str | Path) -> SampledField:
    return decode_field(Path(path).read_bytes())


def export_csv(field: SampledField, path: str | Path) -> Path:
    """One row per node: integer indices, coordinates, re, im."""
    spec = field.spec
    coords = spec.nodes(field.space).reshape(-1, spec.d)
    indices = np.indices(spec.shape).reshape(spec.d, -1).T
    values = field.data.reshape(-1)
    axes = [f"x{i + 1}" if field.space == Space.POSITION else f"p{i + 1}" for i in range(spec.d)]

    with tempfile.TemporaryFile("w+", newline="") as buffer:
        writer = csv.writer(buffer)
        writer.writerow([f"j{i + 1}" for i in range(spec.d)] + axes + ["re", "im"])
        for idx, point, value in zip(indices, coords, values):
            writer.writerow([*idx.tolist(), *(repr(float(c)) for c in point), repr(value.real), repr(value.imag)])
        buffer.seek(0)
        return atomic_write(path, buffer.read())
