"""Solving linear systems over F_p.

Small dense systems only (a few hundred unknowns at most); numpy carries
the row operations.
"""

from __future__ import annotations

from typing import Optional

import numpy as np


def solve_mod_p(A: np.ndarray, b: np.ndarray, p: int) -> tuple[Optional[np.ndarray], list[np.ndarray]]:
    """All solutions of ``A x = b`` over F_p.

    Returns ``(x0, kernel)`` where ``x0`` is a particular solution (``None``
    if the system is inconsistent) and ``kernel`` a basis of the null space.
    """
    A = np.asarray(A, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    m, n = A.shape
    M = np.concatenate([A, b[:, None]], axis=1)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(M[row:, col])[0]
        if nz.size == 0:
            continue
        r = row + nz[0]
        if r != row:
            M[[row, r]] = M[[r, row]]
        inv = pow(int(M[row, col]), -1, p)
        M[row] = (M[row] * inv) % p
        others = np.nonzero(M[:, col])[0]
        others = others[others != row]
        if others.size:
            M[others] = (M[others] - np.outer(M[others, col], M[row])) % p
        pivots.append(col)
        row += 1
    if row < m and np.any(M[row:, n]):
        return None, _kernel(M, pivots, n, p)
    x0 = np.zeros(n, dtype=np.int64)
    for i, col in enumerate(pivots):
        x0[col] = M[i, n]
    return x0, _kernel(M, pivots, n, p)


def _kernel(M: np.ndarray, pivots: list[int], n: int, p: int) -> list[np.ndarray]:
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = np.zeros(n, dtype=np.int64)
        v[free] = 1
        for i, col in enumerate(pivots):
            v[col] = (-M[i, free]) % p
        basis.append(v)
    return basis

