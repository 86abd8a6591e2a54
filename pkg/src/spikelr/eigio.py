"""Eigenvalue vector files.

Two formats: a length-prefixed binary container ("SPK1": 4-byte magic, then
per record a little-endian uint32 count followed by that many little-endian
float64 values) and plain CSV with one eigenvalue per line. The binary form
holds any number of records and is what the CLI caches simulations in.
"""
from __future__ import annotations

import struct
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DataFormatError

MAGIC = b"SPK1"


def write_spk1(path: str | Path, vectors: Iterable[np.ndarray]) -> int:
    """Write eigenvalue vectors to a SPK1 file, returning the record count."""
    count = 0
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        for vec in vectors:
            arr = np.ascontiguousarray(np.asarray(vec, dtype="<f8"))
            if arr.ndim != 1:
                raise DataFormatError("SPK1 records must be 1-d vectors")
            fh.write(struct.pack("<I", arr.size))
            fh.write(arr.tobytes())
            count += 1
    return count


def read_spk1(path: str | Path) -> list[np.ndarray]:
    data = Path(path).read_bytes()
    if data[:4] != MAGIC:
        raise DataFormatError(f"{path}: missing SPK1 magic header")
    out: list[np.ndarray] = []
    offset = 4
    total = len(data)
    while offset < total:
        if offset + 4 > total:
            raise DataFormatError(
                f"{path}: truncated record header at byte {offset}")
        (size,) = struct.unpack_from("<I", data, offset)
        offset += 4
        end = offset + 8 * size
        if end > total:
            raise DataFormatError(
                f"{path}: record claims {size} values but file ends at byte "
                f"{total} (record starts at {offset})")
        out.append(np.frombuffer(data, dtype="<f8", count=size,
                                 offset=offset).astype(float))
        offset = end
    return out


def read_eigs_csv(path: str | Path) -> np.ndarray:
    """One eigenvalue per line; blank lines and '#' comments are skipped."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise DataFormatError(
                    f"{path}:{lineno}: not a number: {text!r}") from None
    if not values:
        raise DataFormatError(f"{path}: no eigenvalues found")
    return np.asarray(values, dtype=float)


def read_eig_file(path: str | Path) -> list[np.ndarray]:
    """Sniff the format by magic bytes and return the contained vectors."""
    with open(path, "rb") as fh:
        head = fh.read(4)
    if head == MAGIC:
        return read_spk1(path)
    return [read_eigs_csv(path)]
