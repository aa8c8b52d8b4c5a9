"""Small exact linear algebra over the rationals.

Matrices are lists of rows of :class:`Fraction`.  Nothing here is clever; it
is sized for the ``d <= ~30`` matrices that quotient rings of desk-scale
systems produce.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .unipoly import UniPoly

Matrix = List[List[Fraction]]

__all__ = [
    "Matrix",
    "identity",
    "zeros",
    "matmul",
    "matvec",
    "mat_add",
    "mat_scale",
    "transpose",
    "trace",
    "det",
    "rank",
    "solve",
    "is_symmetric",
    "char_poly",
    "min_poly",
    "poly_of_matrix",
]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: Optional[int] = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Matrix, v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in A]


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A: Matrix) -> Matrix:
    c = Fraction(c)
    return [[c * a for a in row] for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def trace(A: Matrix) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def is_symmetric(A: Matrix) -> bool:
    n = len(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def _echelon(A: Matrix):
    """Row-reduce a copy of ``A``; return the reduced rows, pivot columns and the determinant factor."""
    M = [list(map(Fraction, row)) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    factor = Fraction(1)
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            factor = -factor
        piv = M[r][c]
        factor *= piv
        inv = 1 / piv
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                t = M[i][c]
                M[i] = [x - t * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots, factor


def det(A: Matrix) -> Fraction:
    n = len(A)
    if n == 0:
        return Fraction(1)
    _, pivots, factor = _echelon(A)
    return factor if len(pivots) == n else Fraction(0)


def rank(A: Matrix) -> int:
    if not A:
        return 0
    return len(_echelon(A)[1])


def solve(A: Matrix, b: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One solution of ``A x = b`` (free variables set to 0), or ``None`` if inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [list(A[i]) + [Fraction(b[i])] for i in range(rows)]
    M, pivots, _ = _echelon(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = M[r][cols]
    return x


def char_poly(A: Matrix, var: str = "T") -> UniPoly:
    """``det(T*I - A)`` by Berkowitz's division-free recursion."""
    n = len(A)
    p = [Fraction(1)]  # coefficients, highest degree first
    for r in range(n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        sub = [A[i][:r] for i in range(r)]
        q = [Fraction(1), -Fraction(A[r][r])]
        v = col
        for _ in range(r):
            q.append(-sum((a * b for a, b in zip(row, v)), Fraction(0)))
            v = matvec(sub, v)
        # lower-triangular Toeplitz(q) times p, i.e. the truncated convolution
        p = [sum((q[i - j] * p[j] for j in range(min(i, r) + 1)), Fraction(0)) for i in range(r + 2)]
    return UniPoly(reversed(p), var)


def min_poly(A: Matrix, var: str = "T") -> UniPoly:
    """Least-degree monic polynomial annihilating ``A``."""
    n = len(A)
    if n == 0:
        return UniPoly([1], var)
    basis_rows: List[List[Fraction]] = []  # echelon rows, each paired with its combination of powers
    combos: List[List[Fraction]] = []
    pivot_cols: List[int] = []
    P = identity(n)
    for k in range(n + 1):
        v = [x for row in P for x in row]
        c = [Fraction(0)] * (k + 1)
        c[k] = Fraction(1)
        for brow, bc, pc in zip(basis_rows, combos, pivot_cols):
            t = v[pc]
            if t:
                v = [x - t * y for x, y in zip(v, brow)]
                c = [x - t * (bc[i] if i < len(bc) else 0) for i, x in enumerate(c)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            # c[0] I + ... + c[k] A^k == 0 with c[k] == 1
            return UniPoly(c, var)
        inv = 1 / v[piv]
        basis_rows.append([x * inv for x in v])
        combos.append([x * inv for x in c])
        pivot_cols.append(piv)
        P = matmul(P, A)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def poly_of_matrix(p: UniPoly, A: Matrix) -> Matrix:
    """Evaluate ``p(A)`` by Horner's rule."""
    n = len(A)
    acc = zeros(n)
    for c in reversed(p.coeffs):
        acc = matmul(acc, A)
        for i in range(n):
            acc[i][i] += c
    return acc
