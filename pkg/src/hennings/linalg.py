"""Exact dense linear algebra over Q(zeta_m)."""

from __future__ import annotations

from .scalar import Scalar


def row_reduce(rows, ncols, m):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows, ncols, m) -> int:
    return len(row_reduce(rows, ncols, m)[1])


def nullspace(rows, ncols, m) -> list[list[Scalar]]:
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    red, pivots = row_reduce(rows, ncols, m)
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = Scalar(m), Scalar(m, [1])
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, m):
    """One solution of rows @ x = rhs, or None when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = row_reduce(aug, ncols + 1, m)
    if ncols in pivots:
        return None
    x = [Scalar(m)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse_matrix(mat, m):
    n = len(mat)
    one, zero = Scalar(m, [1]), Scalar(m)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(mat)]
    red, pivots = row_reduce(aug, 2 * n, m)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in red]
