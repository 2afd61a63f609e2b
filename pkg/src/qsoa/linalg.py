"""Exact linear algebra over Q(q).

Rows are first scaled to integer polynomials in ``q`` (clearing the row's
denominators), then reduced by Bareiss fraction-free elimination, so every
intermediate entry is a minor of the integer matrix and each division is
exact.  Back substitution happens once, in :class:`~qsoa.scalar.Scalar`.

Dense matrices elsewhere in the package are numpy object arrays of Scalars.
"""

import numpy as np
from flint import fmpz_poly

from .scalar import ONE, ZERO, Scalar

__all__ = [
    "echelon",
    "rank",
    "nullspace",
    "zeros",
    "identity",
    "diag",
    "matmul",
    "is_zero_matrix",
    "matrix_strings",
]

_P0 = fmpz_poly(0)
_P1 = fmpz_poly(1)


def _integer_row(row):
    den = _P1
    for c in row:
        if c:
            den = den * (c.den // den.gcd(c.den))
    return [c.num * (den // c.den) if c else _P0 for c in row]


def echelon(rows, ncols):
    """Fraction-free row echelon form.

    ``rows`` is an iterable of length-``ncols`` sequences of Scalars.  Returns
    ``(M, pivots)``: ``M`` the list of nonzero echelon rows (fmpz_poly
    entries) and ``pivots`` the pivot column of each.
    """
    m = [_integer_row([Scalar.coerce(x) for x in r]) for r in rows]
    m = [r for r in m if any(r)]
    pivots = []
    prev = _P1
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(m)):
            if m[i][col] != 0 and (best is None or m[i][col].degree() < m[best][col].degree()):
                best = i
        if best is None:
            continue
        m[top], m[best] = m[best], m[top]
        piv = m[top][col]
        prow = m[top]
        for i in range(top + 1, len(m)):
            row = m[i]
            a = row[col]
            for j in range(col + 1, ncols):
                v = piv * row[j] - a * prow[j]
                if v != 0:
                    quo, rem = divmod(v, prev)
                    if rem != 0:
                        raise ArithmeticError("inexact Bareiss division")
                    row[j] = quo
                else:
                    row[j] = _P0
            row[col] = _P0
        prev = piv
        pivots.append(col)
        top += 1
    return m[:top], pivots


def rank(rows, ncols):
    return len(echelon(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}``, one vector per free column.

    Each vector is scaled so that its first nonzero entry is 1.
    """
    m, pivots = echelon(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    rowsS = [[Scalar(x) for x in r] for r in m]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            row = rowsS[i]
            acc = ZERO
            for j in range(pc + 1, ncols):
                if x[j] and row[j]:
                    acc = acc + row[j] * x[j]
            x[pc] = -acc / row[pc]
        lead = next(v for v in x if v)
        if not lead.is_one():
            inv = lead.inverse()
            x = [v * inv for v in x]
        basis.append(x)
    return basis


def zeros(n, m=None):
    m = n if m is None else m
    a = np.empty((n, m), dtype=object)
    a.fill(ZERO)
    return a


def identity(n):
    a = zeros(n)
    for i in range(n):
        a[i, i] = ONE
    return a


def diag(values):
    values = list(values)
    a = zeros(len(values))
    for i, v in enumerate(values):
        a[i, i] = Scalar.coerce(v)
    return a


def matmul(a, b):
    """Product of object arrays; skips zero entries (the matrices are sparse)."""
    n, k = a.shape
    k2, m = b.shape
    if k != k2:
        raise ValueError("shape mismatch")
    out = zeros(n, m)
    for i in range(n):
        for t in range(k):
            x = a[i, t]
            if not x:
                continue
            for j in range(m):
                y = b[t, j]
                if y:
                    out[i, j] = out[i, j] + x * y
    return out


def is_zero_matrix(a):
    return not any(bool(x) for x in a.flat)


def matrix_strings(a):
    return [[str(x) for x in row] for row in a]
