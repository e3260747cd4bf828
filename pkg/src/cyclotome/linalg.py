"""Gaussian elimination over GF(p) on int64 numpy arrays (p < 2^31)."""
from __future__ import annotations

import numpy as np


def rref(M, p: int):
    """Reduced row echelon form of ``M`` mod ``p``; returns ``(R, pivot_columns)``."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def row_space_intersection_dim(A, B, p: int) -> int:
    """dim(rowspace A ∩ rowspace B) = rank A + rank B - rank [A; B].

    Both matrices must be 2-d with the same column count (zero rows allowed).
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[1]:
        raise ValueError("row spaces must live in the same ambient space")
    return rank(A, p) + rank(B, p) - rank(np.vstack([A, B]), p)
