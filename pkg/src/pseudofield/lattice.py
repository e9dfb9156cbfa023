"""Hermite normal forms and exact integer linear solving."""

from __future__ import annotations

from .errors import NoIntegerSolution
from .field import egcd


def column_hnf(A):
    """Column-style echelon form H = A*U with U unimodular.

    Returns (H, U, pivots) where pivots[j] is the pivot row of column j for
    the leading rank-many columns.  Entries left of each pivot are reduced
    into [0, pivot), so H is canonical for the column lattice of A.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    H = [list(r) for r in A]
    U = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for M in (H, U):
            for r in M:
                x, y = r[j], r[k]
                r[j], r[k] = a * x + b * y, c * x + d * y

    pivots = []
    k = 0
    for i in range(rows):
        if k >= cols:
            break
        for j in range(k + 1, cols):
            if H[i][j] == 0:
                continue
            x, y = H[i][k], H[i][j]
            g, s, t = egcd(x, y)
            colop(k, j, s, t, -y // g, x // g)
        if H[i][k] == 0:
            continue
        if H[i][k] < 0:
            colop(k, k, -1, 0, -1, 0)
        piv = H[i][k]
        for j in range(k):
            q = H[i][j] // piv
            if q:
                for M in (H, U):
                    for r in M:
                        r[j] -= q * r[k]
        pivots.append(i)
        k += 1
    return H, U, pivots


def row_hnf(vectors):
    """Canonical upper-triangular basis (rows) of the lattice spanned by vectors."""
    if not vectors:
        return []
    T = [list(c) for c in zip(*vectors)]
    H, _, pivots = column_hnf(T)
    return [[H[i][j] for i in range(len(H))] for j in range(len(pivots))]


def solve_integer(A, b):
    """Some integer z with A z == b, or NoIntegerSolution."""
    H, U, pivots = column_hnf(A)
    w = [0] * len(U)
    for j, r in enumerate(pivots):
        acc = b[r] - sum(H[r][l] * w[l] for l in range(j))
        if acc % H[r][j]:
            raise NoIntegerSolution(f"row {r}: {acc} not divisible by {H[r][j]}")
        w[j] = acc // H[r][j]
    if any(sum(h * x for h, x in zip(row, w)) != bv for row, bv in zip(H, b)):
        raise NoIntegerSolution("right-hand side lies outside the column span")
    return [sum(u * x for u, x in zip(row, w)) for row in U]


def in_lattice(basis, v) -> bool:
    if not basis:
        return not any(v)
    try:
        solve_integer([list(c) for c in zip(*basis)], list(v))
        return True
    except NoIntegerSolution:
        return False
