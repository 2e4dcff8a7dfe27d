"""Small GF(2) linear algebra helpers on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np


class SingularMatrix(ValueError):
    """Raised when an invertible GF(2) matrix is required but not supplied."""


def gf2_mat(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.uint8) & 1
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    return a


def gf2_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64) & 1).astype(np.uint8)


def gf2_matvec(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ x.astype(np.int64) & 1).astype(np.uint8)


def gf2_rank(a: np.ndarray) -> int:
    m = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
         for row in np.asarray(a, dtype=np.uint8) & 1]
    pivots: dict[int, int] = {}
    for row in m:
        while row:
            h = row.bit_length() - 1
            if h in pivots:
                row ^= pivots[h]
            else:
                pivots[h] = row
                break
    return len(pivots)


def gf2_inv(a: np.ndarray) -> np.ndarray:
    """Inverse over GF(2); raises SingularMatrix if rank-deficient."""
    a = gf2_mat(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("matrix must be square")
    aug = np.concatenate([a.copy(), np.eye(n, dtype=np.uint8)], axis=1)
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, n):
            if aug[r, col]:
                pivot = r
                break
        if pivot is None:
            raise SingularMatrix("matrix is singular over GF(2)")
        if pivot != row:
            aug[[row, pivot]] = aug[[pivot, row]]
        for r in range(n):
            if r != row and aug[r, col]:
                aug[r] ^= aug[row]
        row += 1
    return aug[:, n:].copy()


def gf2_is_invertible(a: np.ndarray) -> bool:
    a = gf2_mat(a)
    return a.shape[0] == a.shape[1] and gf2_rank(a) == a.shape[0]
