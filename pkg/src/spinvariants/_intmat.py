"""Exact integer-matrix helpers shared across modules.

Matrices are row-major tuples of tuples of Python ints.  Everything in
this library stays small (a few dozen rows at most), so the classical
cubic algorithms are plenty; what matters is exactness.  Determinants
use fraction-free Bareiss elimination, never floating point.
"""
from __future__ import annotations

from typing import Iterable

from .gf2 import BitMatrix

IntMatrix = tuple[tuple[int, ...], ...]


def as_int_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Normalize nested sequences into an IntMatrix, rejecting non-integers."""
    out = []
    width = None
    for row in rows:
        vals = tuple(row)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"matrix entries must be integers, got {v!r}")
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ValueError("ragged matrix rows")
        out.append(vals)
    return tuple(out)


def identity_int(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose_int(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def matmul_int(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    bt = transpose_int(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def is_identity_int(m: IntMatrix) -> bool:
    return all(len(row) == len(m) and
               all(v == (1 if i == j else 0) for j, v in enumerate(row))
               for i, row in enumerate(m))


def block_diag(blocks: Iterable[IntMatrix]) -> IntMatrix:
    """Direct sum of square blocks."""
    blocks = list(blocks)
    total = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for row in b:
            if len(row) != len(b):
                raise ValueError("blocks must be square")
            rows.append((0,) * offset + tuple(row) + (0,) * (total - offset - len(b)))
        offset += len(b)
    return tuple(rows)


def mod2(m: Iterable[Iterable[int]]) -> BitMatrix:
    return BitMatrix.from_rows(m)


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination.

    Every interior division is exact by the Bareiss identity, so the
    computation never leaves the integers.
    """
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("determinant requires a square matrix")
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def multiplicative_order(m: IntMatrix, cap: int = 512) -> int | None:
    """Smallest k >= 1 with m^k = I, or None when no k <= cap works."""
    power = m
    for k in range(1, cap + 1):
        if is_identity_int(power):
            return k
        power = matmul_int(power, m)
    return None
