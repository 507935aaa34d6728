"""Dense exact linear algebra over GF(q).

Matrices are 2-d numpy arrays of element indices (dtype per the field),
passed together with the GF instance.  Everything is plain Gaussian
elimination with deterministic pivoting: the first nonzero entry in
column order wins, so canonical forms are reproducible byte for byte.
Zero-row and zero-column matrices are legal throughout.
"""

from __future__ import annotations

import numpy as np

from .bits import popcount_table, subset_max_accumulate
from .errors import DimensionMismatchError
from .gf import GF


def as_matrix(gf: GF, data) -> np.ndarray:
    m = np.array(data, dtype=gf.dtype)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if m.size and int(m.max(initial=0)) >= gf.q:
        raise ValueError("entry out of range for GF(%d)" % gf.q)
    return m


def zeros(gf: GF, rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=gf.dtype)


def identity(gf: GF, n: int) -> np.ndarray:
    m = zeros(gf, n, n)
    np.fill_diagonal(m, 1)
    return m


def rref(gf: GF, mat) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    r = np.array(mat, dtype=gf.dtype, copy=True)
    if r.ndim != 2:
        raise DimensionMismatchError("rref needs a 2-d matrix")
    nrows, ncols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        src = row + int(nz[0])
        if src != row:
            r[[row, src]] = r[[src, row]]
        r[row] = gf.mul(gf.inv(int(r[row, col])), r[row])
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            factors = r[others, col]
            r[others] = gf.sub(r[others], gf.mul(factors[:, None], r[row][None, :]))
        pivots.append(col)
        row += 1
    return r, row, pivots


def rank(gf: GF, mat) -> int:
    return rref(gf, mat)[1]


def rank_profile(gf: GF, mat) -> np.ndarray:
    """profile[i] = rank of the first i+1 rows (one incremental pass)."""
    mat = np.asarray(mat, dtype=gf.dtype)
    nrows, ncols = mat.shape
    basis: list[np.ndarray] = []   # kept mutually reduced
    pivots: list[int] = []
    profile = np.empty(nrows, dtype=np.int64)
    for i in range(nrows):
        v = mat[i].copy()
        for j, c in enumerate(pivots):
            coef = int(v[c])
            if coef:
                v = gf.sub(v, gf.mul(coef, basis[j]))
        nz = np.nonzero(v)[0]
        if nz.size:
            c = int(nz[0])
            v = gf.mul(gf.inv(int(v[c])), v)
            for j in range(len(basis)):
                coef = int(basis[j][c])
                if coef:
                    basis[j] = gf.sub(basis[j], gf.mul(coef, v))
            basis.append(v)
            pivots.append(c)
        profile[i] = len(pivots)
    return profile


def null_space_from_rref(gf: GF, r: np.ndarray, rk: int, pivots, ncols: int) -> np.ndarray:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = zeros(gf, len(free), ncols)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, list(pivots)] = gf.neg(r[:rk, free].T)
    return basis


def null_space(gf: GF, mat) -> np.ndarray:
    """Row basis of {v : mat @ v = 0}; identity for a 0 x n matrix."""
    mat = np.asarray(mat, dtype=gf.dtype)
    r, rk, pivots = rref(gf, mat)
    return null_space_from_rref(gf, r, rk, pivots, mat.shape[1])


def row_space_equal(gf: GF, a, b) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatchError("row spaces live in different ambient spaces")
    ra, ka, _ = rref(gf, a)
    rb, kb, _ = rref(gf, b)
    return ka == kb and np.array_equal(ra[:ka], rb[:kb])


def matmul(gf: GF, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=gf.dtype)
    b = np.asarray(b, dtype=gf.dtype)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    out = zeros(gf, a.shape[0], b.shape[1])
    for k in range(a.shape[1]):
        out = gf.add(out, gf.mul(a[:, k][:, None], b[k][None, :]))
    return out


def matvec(gf: GF, a, v) -> np.ndarray:
    a = np.asarray(a, dtype=gf.dtype)
    v = np.asarray(v, dtype=gf.dtype)
    if a.shape[1] != v.shape[0]:
        raise DimensionMismatchError(f"cannot apply {a.shape} to vector of length {v.shape[0]}")
    out = np.zeros(a.shape[0], dtype=gf.dtype)
    for k in np.nonzero(v)[0]:
        out = gf.add(out, gf.mul(int(v[k]), a[:, k]))
    return out


def submatrix_columns(mat: np.ndarray, cols) -> np.ndarray:
    """Column restriction; preserves the row count, validates indices."""
    mat = np.asarray(mat)
    cols = list(cols)
    for c in cols:
        if not 0 <= int(c) < mat.shape[1]:
            raise IndexError(f"column {c} out of range for {mat.shape[1]} columns")
    if not cols:
        return mat[:, :0]
    return mat[:, cols]


def independent_column_sets(gf: GF, mat) -> list[int]:
    """Bitmasks of all linearly independent column subsets (incl. the empty set).

    Depth-first: at each node one pivot row is eliminated from every
    remaining column, so a candidate column is independent from the chosen
    set exactly when its reduced vector is nonzero.
    """
    mat = np.asarray(mat, dtype=gf.dtype)
    nrows, ncols = mat.shape
    out = [0]
    if nrows == 0 or ncols == 0:
        return out

    def walk(start: int, mask: int, cols: np.ndarray) -> None:
        alive = start + np.nonzero(cols[:, start:].any(axis=0))[0]
        for j in alive:
            j = int(j)
            v = cols[:, j].copy()
            child = mask | (1 << j)
            out.append(child)
            if j + 1 == ncols:
                continue
            pivot_row = int(np.nonzero(v)[0][0])
            inv = gf.inv(int(v[pivot_row]))
            factors = gf.mul(inv, cols[pivot_row])
            reduced = gf.sub(cols, gf.mul(v[:, None], factors[None, :]))
            walk(j + 1, child, reduced)

    walk(0, 0, mat.copy())
    return out


def subset_rank_table(gf: GF, mat) -> np.ndarray:
    """rank of every column subset, as an array indexed by bitmask.

    rank(W) = size of the largest independent subset inside W, so a
    subset-max transform over the independent sets gives every rank at once.
    """
    mat = np.asarray(mat, dtype=gf.dtype)
    n = mat.shape[1]
    faces = np.asarray(independent_column_sets(gf, mat), dtype=np.int64)
    pc = popcount_table(n)
    table = np.zeros(1 << n, dtype=np.int8)
    table[faces] = pc[faces]
    subset_max_accumulate(table, n)
    return table
