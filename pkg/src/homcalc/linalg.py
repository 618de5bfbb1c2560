"""Dense exact linear algebra over a field.

Matrices are lists of rows of field elements.  For prime fields the
kernels are vectorized with numpy int64 (safe: p < 2**15.5 so a*b < 2**63
and every row operation reduces mod p immediately).  The rational path is
a plain fraction Gaussian elimination.

This module is deliberately self-contained: it knows nothing about
polynomials, Groebner bases, or complexes.  Both the main pipeline's
graded-slice computations and the independent oracle sit on top of it.
"""

from __future__ import annotations

import numpy as np

from .field import PrimeField


def _to_np(rows, p):
    if len(rows) == 0:
        return np.zeros((0, 0), dtype=np.int64)
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(len(rows), -1)
    return a % p


def fp_rref(a: np.ndarray, p: int):
    """Reduced row echelon form mod p. Returns (rref_matrix, pivot_columns)."""
    a = a % p
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _generic_rref(rows, field):
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        k = next((i for i in range(r, m) if not field.is_zero(a[i][c])), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(m):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(rows, field):
    """RREF over an arbitrary field object; returns (rows, pivot_columns)."""
    if isinstance(field, PrimeField):
        a, piv = fp_rref(_to_np(rows, field.p), field.p)
        return a.tolist(), piv
    return _generic_rref(rows, field)


def rank(rows, field) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows, field)[1])


def nullspace(rows, field):
    """Basis of the right nullspace of the matrix (list of vectors).

    rows: m x n matrix; returns vectors v of length n with A v = 0,
    one per free column, in column order (deterministic).
    """
    if not rows:
        return []
    n = len(rows[0])
    if n == 0:
        return []
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * n
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            # pivot row r: x_pc = -sum over free cols of red[r][fc]
            val = red[r][fc]
            if isinstance(field, PrimeField):
                v[pc] = (-int(val)) % field.p
            else:
                v[pc] = field.neg(val)
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """One solution of A x = b, or None if inconsistent.

    rows: m x n, rhs: length m. Deterministic particular solution with
    free variables set to zero.
    """
    if not rows:
        return [] if all(field.is_zero(b) for b in rhs) else None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    for r in range(len(red)):
        lead = next((c for c in range(n + 1) if not field.is_zero(field.normalize(red[r][c]))), None)
        if lead == n:
            return None
    x = [field.zero] * n
    for r, pc in enumerate(pivots):
        if pc < n:
            x[pc] = field.normalize(red[r][n])
    return x


def row_space_basis(rows, field):
    """Rows of the RREF restricted to nonzero rows (a basis of the row space)."""
    if not rows:
        return []
    red, pivots = rref(rows, field)
    return [list(red[r]) for r in range(len(pivots))]


def in_row_space(rows_rref, pivots, vec, field):
    """Membership test against a precomputed RREF basis."""
    v = [field.normalize(x) for x in vec]
    for r, pc in enumerate(pivots):
        if not field.is_zero(v[pc]):
            f = v[pc]
            row = rows_rref[r]
            v = [field.sub(x, field.mul(f, field.normalize(y))) for x, y in zip(v, row)]
    return all(field.is_zero(x) for x in v)
