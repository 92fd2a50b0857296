"""
Binary cache files for the divisor table and the zeta sample grid.

ZDL1: b"ZDL1", limit <u8, then d(1..limit) as <u4
ZGR1: b"ZGR1", t_start/t_end/step as <f8, method byte, then samples as <f8

The method byte carries the sampling method in its high nibble (0 Euler–Maclaurin,
1 Riemann–Siegel) and the Riemann–Siegel correction order in its low nibble.
Writes go to a temporary file in the target directory followed by os.replace.
"""

import logging
import os
import struct
import tempfile
from pathlib import Path
from typing import Union

import numpy as np

from libs.divisor.divisor_table import DivisorTable, table_from_counts
from libs.exceptions import CacheCorruptError, DataError, ParameterError
from libs.zeta.models import MethodTag
from libs.zeta.sample_grid import ZetaSampleGrid

logger = logging.getLogger(__name__)

DIVISOR_MAGIC = b"ZDL1"
GRID_MAGIC = b"ZGR1"
_DIVISOR_HEADER = struct.Struct("<4sQ")
_GRID_HEADER = struct.Struct("<4sdddB")
_METHOD_CODES = {MethodTag.EULER_MACLAURIN: 0, MethodTag.RIEMANN_SIEGEL: 1}

PathLike = Union[str, Path]


def _atomic_write(path: Path, header: bytes, payload: np.ndarray) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=str(path.parent), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(header)
            handle.write(payload.tobytes())
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def save_divisor_table(table: DivisorTable, path: PathLike) -> Path:
    """Write d(1..limit) behind a ZDL1 header."""
    path = Path(path)
    header = _DIVISOR_HEADER.pack(DIVISOR_MAGIC, table.limit)
    _atomic_write(path, header, np.ascontiguousarray(table.d[1:], dtype="<u4"))
    logger.info(f"Saved divisor table (limit {table.limit}) to {path}")
    return path


def load_divisor_table(path: PathLike) -> DivisorTable:
    """Read a ZDL1 file; prefix sums are rebuilt and checked against the hyperbola identity."""
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _DIVISOR_HEADER.size:
        raise CacheCorruptError(f"{path}: file shorter than the ZDL1 header")
    magic, limit = _DIVISOR_HEADER.unpack_from(raw)
    if magic != DIVISOR_MAGIC:
        raise CacheCorruptError(f"{path}: bad magic {magic!r}")
    if limit < 1 or len(raw) != _DIVISOR_HEADER.size + 4 * limit:
        raise CacheCorruptError(f"{path}: length {len(raw)} does not match limit {limit}")
    counts = np.frombuffer(raw, dtype="<u4", offset=_DIVISOR_HEADER.size)
    d = np.zeros(limit + 1, dtype=np.int32)
    d[1:] = counts
    if d[1] != 1:
        raise CacheCorruptError(f"{path}: d(1) = {d[1]}")
    try:
        return table_from_counts(d)
    except DataError as exc:
        raise CacheCorruptError(f"{path}: {exc}") from exc


def save_zeta_grid(grid: ZetaSampleGrid, path: PathLike) -> Path:
    """Write the grid samples behind a ZGR1 header."""
    path = Path(path)
    method = (_METHOD_CODES[grid.method_tag] << 4) | (grid.rs_order & 0x0F)
    header = _GRID_HEADER.pack(GRID_MAGIC, grid.t_start, grid.t_end, grid.step, method)
    _atomic_write(path, header, np.ascontiguousarray(grid.values, dtype="<f8"))
    logger.info(f"Saved zeta grid [{grid.t_start}, {grid.t_end}] to {path}")
    return path


def load_zeta_grid(path: PathLike) -> ZetaSampleGrid:
    """Read a ZGR1 file and validate its sample count and values."""
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _GRID_HEADER.size:
        raise CacheCorruptError(f"{path}: file shorter than the ZGR1 header")
    magic, t_start, t_end, step, method = _GRID_HEADER.unpack_from(raw)
    if magic != GRID_MAGIC:
        raise CacheCorruptError(f"{path}: bad magic {magic!r}")
    codes = {code: tag for tag, code in _METHOD_CODES.items()}
    if method >> 4 not in codes or not step > 0 or not t_end > t_start:
        raise CacheCorruptError(f"{path}: invalid header")
    expected = int(round((t_end - t_start) / step)) + 1
    if len(raw) != _GRID_HEADER.size + 8 * expected:
        raise CacheCorruptError(f"{path}: length {len(raw)} does not match {expected} samples")
    values = np.frombuffer(raw, dtype="<f8", offset=_GRID_HEADER.size).astype(float)
    if not np.all(np.isfinite(values)):
        raise CacheCorruptError(f"{path}: non-finite samples")
    try:
        return ZetaSampleGrid(t_start=t_start, t_end=t_end, step=step, values=values,
                              method_tag=codes[method >> 4], rs_order=method & 0x0F)
    except ParameterError as exc:
        raise CacheCorruptError(f"{path}: {exc}") from exc
