"""CSV and sparse-triplet file handling.

Matrices travel as headerless CSV, one row per line.  Numbers are
written with ``repr``, the shortest decimal string that parses back to
the identical float, so rewriting a file is byte-stable and reading one
is lossless.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ParseError


def format_float(x: float) -> str:
    """Shortest decimal representation that round-trips the exact value."""
    return repr(float(x))


def write_matrix_csv(path: str | os.PathLike, M: np.ndarray) -> None:
    """Write a matrix as headerless CSV with round-trip precision."""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    with open(path, "w", encoding="ascii") as fh:
        for row in M:
            fh.write(",".join(format_float(v) for v in row))
            fh.write("\n")


def read_matrix_csv(path: str | os.PathLike) -> np.ndarray:
    """Read a headerless CSV matrix; malformed content raises ParseError."""
    rows: list[list[float]] = []
    try:
        with open(path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rows.append([float(tok) for tok in line.split(",")])
                except ValueError as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ParseError(f"{path}: no numeric rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError(f"{path}: ragged rows (expected width {width})")
    return np.array(rows, dtype=float)


def write_triplets(path: str | os.PathLike,
                   triplets: list[tuple[int, int, int]]) -> None:
    """Write sparse entries as ``row col sign`` lines, 1-based, sorted."""
    with open(path, "w", encoding="ascii") as fh:
        for row, col, sign in sorted(triplets):
            fh.write(f"{row} {col} {sign}\n")
