"""Exact determinants and inverses of rational matrices.

This is the independent oracle every closed form is checked against:
denominators are cleared row by row and the resulting integer matrix is
run through Bareiss fraction-free elimination.

The elimination kernel is compiled (``_bareiss_core``) when the extension
is available and falls back to ``_bareiss_py`` otherwise. Setting
``FILBERT_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import _bareiss_py

if os.environ.get("FILBERT_PURE_PYTHON", "") not in ("", "0"):
    _kernel = _bareiss_py
else:
    try:
        from . import _bareiss_core as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _bareiss_py

BACKEND = "cython" if _kernel is not _bareiss_py else "python"

Matrix = list  # list of rows


class SingularMatrixError(ZeroDivisionError):
    pass


@dataclass
class EliminationTrace:
    pivots: list[int] = field(default_factory=list)
    determinant: Fraction = Fraction(0)
    singular: bool = False


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def clear_denominators(m: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators.

    Returns the integer matrix and the per-row scale factors.
    """
    rows = []
    scales = []
    for row in m:
        fr = [Fraction(x) for x in row]
        s = lcm(*(x.denominator for x in fr)) if fr else 1
        rows.append([x.numerator * (s // x.denominator) for x in fr])
        scales.append(s)
    return rows, scales


def elimination_trace(m: Sequence[Sequence], kernel=None) -> EliminationTrace:
    kernel = kernel or _kernel
    _check_square(m)
    ints, scales = clear_denominators(m)
    d, pivots = kernel.bareiss_det(ints)
    if d == 0:
        return EliminationTrace(pivots=pivots, determinant=Fraction(0), singular=True)
    scale = 1
    for s in scales:
        scale *= s
    return EliminationTrace(pivots=pivots, determinant=Fraction(d, scale))


def det(m: Sequence[Sequence], kernel=None) -> Fraction:
    """Exact determinant of a square rational matrix."""
    return elimination_trace(m, kernel).determinant


def invert(m: Sequence[Sequence], kernel=None) -> Matrix:
    """Exact inverse of a square rational matrix.

    Raises SingularMatrixError if ``m`` is singular.
    """
    kernel = kernel or _kernel
    n = _check_square(m)
    ints, scales = clear_denominators(m)
    d, adj, _ = kernel.bareiss_adjugate(ints)
    if adj is None:
        raise SingularMatrixError("matrix is singular")
    # m = diag(scales)^-1 * ints, so m^-1 = ints^-1 * diag(scales)
    return [[Fraction(adj[i][j] * scales[j], d) for j in range(n)] for i in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], kernel=None) -> Matrix:
    kernel = kernel or _kernel
    if a and len(a[0]) != len(b):
        raise ValueError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    return kernel.matmul(a, b)


def is_identity(m: Sequence[Sequence]) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
    )
