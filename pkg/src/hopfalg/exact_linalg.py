"""Exact Gaussian elimination with first-nonzero pivoting.

Prime-field matrices (int64) get a fast path; object-dtype matrices use
the field's own exact division.  Kernels and inverses are canonical: rref
normalises pivots to 1 and free variables are set in ascending column
order, so results are deterministic.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .fields import Field


def _rref_modp_numpy(M, p):
    R = M.copy() % p
    rows, cols = R.shape
    piv = np.full(cols, -1, np.int64)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        f = R[:, c].copy()
        f[r] = 0
        R = (R - np.outer(f, R[r])) % p
        piv[c] = r
        r += 1
    return R, piv


def _rref_object(M, field):
    R = M.copy()
    rows, cols = R.shape
    piv = [-1] * cols
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = -1
        for i in range(r, rows):
            if R[i, c] != field.zero:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        inv = field.inv(R[r, c])
        for j in range(cols):
            R[r, j] = field.mul(R[r, j], inv)
        for i in range(rows):
            if i != r and R[i, c] != field.zero:
                f = R[i, c]
                for j in range(cols):
                    R[i, j] = field.sub(R[i, j], field.mul(f, R[r, j]))
        piv[c] = r
        r += 1
    return R, np.array(piv, np.int64)


def rref(M, field: Field):
    """Reduced row echelon form; returns (R, pivots) where pivots[c] is
    the pivot row of column c, or -1."""
    if M.size == 0:
        return M.copy(), np.full(M.shape[1], -1, np.int64)
    if field.is_prime:
        if backend.use_numba():
            return backend._numba().rref(np.ascontiguousarray(M), field.p)
        return _rref_modp_numpy(M, field.p)
    return _rref_object(M, field)


def rank(M, field: Field) -> int:
    _, piv = rref(M, field)
    return int((piv >= 0).sum())


def kernel_basis(M, field: Field):
    """Basis of the right null space, one vector per free column."""
    rows, cols = M.shape
    R, piv = rref(M, field)
    free = [c for c in range(cols) if piv[c] < 0]
    basis = []
    for f in free:
        v = field.zeros(cols)
        v[f] = field.one
        for c in range(cols):
            if piv[c] >= 0:
                v[c] = field.neg(R[piv[c], f])
        basis.append(v)
    return basis


def solve(A, b, field: Field):
    """One exact solution of A x = b, or None; free variables are zero."""
    rows, cols = A.shape
    aug = field.zeros((rows, cols + 1))
    aug[:, :cols] = A
    aug[:, cols] = b
    R, piv = rref(aug, field)
    if piv[cols] >= 0:
        return None  # inconsistent
    x = field.zeros(cols)
    for c in range(cols):
        if piv[c] >= 0:
            x[c] = R[piv[c], cols]
    return x


def inverse(M, field: Field):
    """Exact inverse, or None if singular."""
    d = M.shape[0]
    if M.shape[0] != M.shape[1]:
        raise ValueError("inverse of a non-square matrix")
    aug = field.zeros((d, 2 * d))
    aug[:, :d] = M
    aug[:, d:] = field.eye(d)
    R, piv = rref(aug, field)
    if any(piv[c] != c for c in range(d)):
        return None
    return R[:, d:].copy()


def is_invertible(M, field: Field) -> bool:
    return M.shape[0] == M.shape[1] and inverse(M, field) is not None
