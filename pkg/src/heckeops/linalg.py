"""Exact dense linear algebra over cyclotomic numbers.

Matrices are lists of row lists of CycNum.  Everything here is
division-exact; no pivoting heuristics beyond first-nonzero, so results are
deterministic for fixed input.
"""

from __future__ import annotations

from .cyclotomic import CycNum
from .errors import HeckeError
from .polynomial import Poly

Matrix = list[list[CycNum]]
Vector = list[CycNum]


def identity(n: int) -> Matrix:
    return [[CycNum(1 if i == j else 0) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = CycNum(0)
            for t in range(k):
                x = ai[t]
                if x:
                    acc = acc + x * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    out = []
    for row in a:
        acc = CycNum(0)
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mat(n: int, s: CycNum) -> Matrix:
    return [[s if i == j else CycNum(0) for j in range(n)] for i in range(n)]


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Matrix) -> list[Vector]:
    """Basis of the right kernel, one vector per free column, ascending."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [CycNum(0)] * ncols
        v[free] = CycNum(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(v)
    return basis


def solve(matrix: Matrix, rhs: Vector) -> Vector | None:
    """One exact solution of matrix*x = rhs, or None when inconsistent."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [CycNum(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def charpoly(matrix: Matrix) -> Poly:
    """Characteristic polynomial det(T*I - M), ascending coefficients.

    Uses the trace recursion (Faddeev-LeVerrier), which stays exact because
    each step divides by an integer only.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise HeckeError("characteristic polynomial needs a square matrix")
    coeffs_desc = [CycNum(1)]
    mk = [row[:] for row in matrix]
    for k in range(1, n + 1):
        tr = CycNum(0)
        for i in range(n):
            tr = tr + mk[i][i]
        ck = -tr / k
        coeffs_desc.append(ck)
        if k < n:
            for i in range(n):
                mk[i][i] = mk[i][i] + ck
            mk = mat_mul(matrix, mk)
    return Poly(list(reversed(coeffs_desc)))
