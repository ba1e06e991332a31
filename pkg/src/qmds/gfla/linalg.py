"""Row reduction and null spaces over GF(q) on index matrices."""

from __future__ import annotations

import numpy as np

from ..gf import FieldSpec


def as_matrix(M, cols: int | None = None) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size or cols is None else M.reshape(0, cols)
    if M.size == 0 and cols is not None:
        M = M.reshape(0, cols)
    return M


def rref(M, field: FieldSpec) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns.

    Pivots are the leftmost nonzero column, taken from the topmost available row.
    """
    R = as_matrix(M).copy()
    rows, cols = R.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = field.mul(field.inv(R[r, c]), R[r])
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            R[others] = field.sub(R[others], field.mul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M, field: FieldSpec) -> int:
    M = as_matrix(M)
    if M.shape[0] == 0:
        return 0
    return rref(M, field)[1]


def row_basis(M, field: FieldSpec, cols: int | None = None) -> np.ndarray:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    M = as_matrix(M, cols)
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1])
    R, r, _ = rref(M, field)
    return R[:r]


def kernel(M, field: FieldSpec, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of the right null space {x : M x^T = 0}."""
    M = as_matrix(M, cols)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, r, pivots = rref(M, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        K[t, pivots] = field.neg(R[:r, f])
    return K


def in_row_space(basis: np.ndarray, vectors, field: FieldSpec) -> np.ndarray:
    """Boolean mask: which rows of ``vectors`` lie in the row space of ``basis``.

    ``basis`` must be in reduced row-echelon form without zero rows.
    """
    V = as_matrix(vectors, basis.shape[1])
    if basis.shape[0] == 0:
        return ~V.any(axis=1)
    _, _, pivots = rref(basis, field)
    coeffs = V[:, pivots]
    recon = field.matmul(coeffs, basis)
    return np.all(recon == V, axis=1)
