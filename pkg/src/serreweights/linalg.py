"""Dense linear algebra over a prime field ``F_p`` on int64 numpy arrays."""

from __future__ import annotations

import numpy as np


def _mat_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # float64 BLAS is exact while every partial sum stays below 2**53
    if a.shape[-1] * (p - 1) ** 2 < 2**52:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p
    return (a.astype(object) @ b.astype(object) % p).astype(np.int64)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _mat_mod(np.asarray(a), np.asarray(b), p)


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``A`` mod ``p`` and its pivot columns.

    Returned rows are exactly the nonzero rows of the echelon form.
    """
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[0] > 4 * A.shape[1]:
        rs = RowSpace(A.shape[1], p)
        rs.add(A)
        return rs.rank
    return len(rref(A, p)[1])


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : A x = 0}`` as rows."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, piv = rref(A, p) if A.shape[0] else (np.zeros((0, n), dtype=np.int64), [])
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for i, c in enumerate(free):
        N[i, c] = 1
        for r, pc in enumerate(piv):
            N[i, pc] = -R[r, c] % p
    return N


class RowSpace:
    """Row space accumulated chunk by chunk, kept in reduced echelon form.

    Used for tall systems where stacking every equation at once would not
    fit comfortably in memory.
    """

    def __init__(self, ncols: int, p: int, chunk: int = 4096):
        self.p = p
        self.ncols = ncols
        self.chunk = chunk
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, rows: np.ndarray) -> None:
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, self.ncols)
        for start in range(0, rows.shape[0], self.chunk):
            if self.rank == self.ncols:
                return
            self._add_chunk(rows[start : start + self.chunk] % self.p)

    def _add_chunk(self, C: np.ndarray) -> None:
        p = self.p
        if self.rank:
            C = (C - matmul_mod(C[:, self.pivots], self.basis, p)) % p
        C = C[np.any(C, axis=1)]
        if C.shape[0] == 0:
            return
        R, piv = rref(C, p)
        if not piv:
            return
        # clear the new pivot columns out of the old basis, then merge
        old = self.basis
        if old.shape[0]:
            old = (old - matmul_mod(old[:, piv], R, p)) % p
        merged = np.vstack([old, R])
        order = np.argsort(self.pivots + piv, kind="stable")
        self.basis = merged[order]
        self.pivots = [(self.pivots + piv)[i] for i in order]
