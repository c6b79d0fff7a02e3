"""Dense exact linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries normalised to [0, p).
Everything here is elementary row reduction; no floating point anywhere.
"""

from __future__ import annotations

import numpy as np


def normalize(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of `a` mod p.

    Returns (r, pivots) where r contains only the nonzero rows and
    pivots[i] is the pivot column of row i.
    """
    a = normalize(a, p).copy()
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0), []
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a: np.ndarray, p: int) -> int:
    return rref(a, p)[0].shape[0]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : a @ x == 0 (mod p)}."""
    a = normalize(a, p)
    cols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-int(r[row, fc])) % p
    return basis


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (rref) basis of the row space."""
    return rref(a, p)[0]


def in_row_space(basis: np.ndarray, x: np.ndarray, p: int) -> bool:
    stacked = np.vstack([basis, normalize(x, p).reshape(1, -1)])
    return rank(stacked, p) == rank(basis, p)


def solve_row_combination(basis: np.ndarray, x: np.ndarray, p: int) -> np.ndarray | None:
    """Coefficients c with c @ basis == x, or None if x is not in the span."""
    x = normalize(x, p).reshape(-1)
    if basis.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not x.any() else None
    aug = np.hstack([basis.T % p, x.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    ncoef = basis.shape[0]
    if ncoef in pivots:
        return None
    c = np.zeros(ncoef, dtype=np.int64)
    for row, pc in enumerate(pivots):
        c[pc] = r[row, -1]
    return c


def solve_matrix_in_rows(basis: np.ndarray, xs: np.ndarray, p: int) -> np.ndarray:
    """Express each row of xs in terms of rows of basis; raises if impossible."""
    out = np.zeros((xs.shape[0], basis.shape[0]), dtype=np.int64)
    for i in range(xs.shape[0]):
        c = solve_row_combination(basis, xs[i], p)
        if c is None:
            raise ArithmeticError("vector not in row space")
        out[i] = c
    return out


def intersect_row_spaces(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Basis (rref) of the intersection of the two row spaces."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    # x = c @ a = d @ b; solve [c, d] in the nullspace of [a.T | -b.T].
    stacked = np.vstack([a, (-b) % p])
    ns = nullspace(stacked.T % p, p)
    if ns.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    vecs = ns[:, : a.shape[0]] @ a % p
    return row_space(vecs, p)
