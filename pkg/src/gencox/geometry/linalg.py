"""Small exact linear algebra over the rationals (lists of Fractions)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import IntegrityError


def rref(rows):
    """Reduced row echelon form and pivot columns."""
    A = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    if not A:
        return A, pivots
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int):
    """Basis of ``{x : A x = 0}``."""
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def primitive(vec) -> tuple[int, ...]:
    """Integer multiple with coprime entries and first nonzero entry positive."""
    vec = [Fraction(x) for x in vec]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise IntegrityError("zero vector has no primitive direction")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def inverse(M):
    """Exact inverse of a square matrix given as rows."""
    k = len(M)
    aug = [list(map(Fraction, M[i])) + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    R, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise IntegrityError("singular matrix")
    return [row[k:] for row in R]


def integer_inverse(M):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = inverse(M)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise IntegrityError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def determinant(M) -> Fraction:
    A = [list(map(Fraction, r)) for r in M]
    k = len(A)
    det = Fraction(1)
    for c in range(k):
        p = next((i for i in range(c, k) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, k):
            f = A[i][c] / A[c][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det
