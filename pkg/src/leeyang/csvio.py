"""CSV writers for the pipeline's file contracts.

Every float field is printed with 17 significant digits so values
round-trip losslessly; identical inputs therefore produce byte-identical
files.
"""
from __future__ import annotations

import os


def fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_rows(path: str, header: list, rows) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")
    return path


def matrix_triplets(matrix) -> list:
    """Nonzero entries as (row, col, re, im) rows, row-major order."""
    out = []
    rows, cols = matrix.nonzero()
    for r, c in zip(rows.tolist(), cols.tolist()):
        v = matrix[r, c]
        out.append((r, c, float(v.real), float(v.imag)))
    return out
