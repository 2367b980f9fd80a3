"""Plain-text matrix format for cross-language oracle comparison.

First line: "rows cols". Then one line per row with "re im" pairs.
"""
import numpy as np


def export_operator(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    rows, cols = matrix.shape
    lines = [f"{rows} {cols}"]
    for row in matrix:
        lines.append(" ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def import_operator(text):
    lines = [line for line in text.splitlines() if line.strip()]
    rows, cols = (int(v) for v in lines[0].split())
    if len(lines) - 1 != rows:
        raise ValueError(f"Header announces {rows} rows, found {len(lines) - 1}")
    matrix = np.empty((rows, cols), dtype=complex)
    for i, line in enumerate(lines[1:]):
        values = [float(v) for v in line.split()]
        if len(values) != 2 * cols:
            raise ValueError(f"Row {i} has {len(values) // 2} entries, expected {cols}")
        matrix[i] = np.array(values[0::2]) + 1j * np.array(values[1::2])
    return matrix
