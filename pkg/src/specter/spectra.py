"""Eigenvalue tests: exact integer nullity, exact resolvents, float spectra.

Membership decisions ("is t an eigenvalue of G") and the resolvent behind
star-complement inner products are done with fraction-free elimination over
Python ints. Floating point is only used for interlacing comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphcore import Graph

SYMMETRY_TOL = 1e-12


class SingularMatrixError(ArithmeticError):
    pass


def shifted_matrix(G: Graph, t: int) -> list[list[int]]:
    """Integer matrix tI - A_G."""
    n = G.n
    M = [[-((G.rows[i] >> j) & 1) for j in range(n)] for i in range(n)]
    for i in range(n):
        M[i][i] = t
    return M


def bareiss_rank(M: list[list[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination (all divisions exact)."""
    A = [row[:] for row in M]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if A[i][col]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for i in range(rank + 1, nrows):
            a = A[i][col]
            row_i, row_r = A[i], A[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
    return rank


def bareiss_det(M: list[list[int]]) -> int:
    A = [row[:] for row in M]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        p = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (p * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = p
    return sign * A[n - 1][n - 1] if n else 1


def eigenvalue_multiplicity_exact(G: Graph, t: int) -> int:
    """Nullity of tI - A_G in exact arithmetic; 0 iff t is not an eigenvalue."""
    if G.n == 0:
        return 0
    return G.n - bareiss_rank(shifted_matrix(G, t))


def has_eigenvalue(G: Graph, t: int) -> bool:
    return eigenvalue_multiplicity_exact(G, t) > 0


@dataclass(frozen=True)
class RationalResolvent:
    """(rI - A_H)^{-1} stored as ``numer / denom`` with integer ``numer``, ``denom > 0``."""

    order: int
    r: int
    numer: tuple[tuple[int, ...], ...]
    denom: int

    @property
    def entries(self) -> list[list[Fraction]]:
        return [[Fraction(x, self.denom) for x in row] for row in self.numer]

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.numer[i][j], self.denom)


def fraction_free_inverse(M: list[list[int]]) -> tuple[list[list[int]], int]:
    """Return (N, d) with M^{-1} = N / d and d > 0.

    Fraction-free Gauss-Jordan on [M | I]; once finished the left block is
    d*I and the right block d*M^{-1}.
    """
    n = len(M)
    A = [list(M[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if A[i][k]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        A[k], A[pivot] = A[pivot], A[k]
        p = A[k][k]
        row_k = A[k]
        for i in range(n):
            if i == k:
                continue
            row_i = A[i]
            a = row_i[k]
            for j in range(2 * n):
                if j != k:
                    row_i[j] = (p * row_i[j] - a * row_k[j]) // prev
            row_i[k] = 0
        prev = p
    d = prev if n else 1
    N = [A[i][n:] for i in range(n)]
    # every diagonal entry of the left block equals d now
    if d < 0:
        d = -d
        N = [[-x for x in row] for row in N]
    return N, d


def resolvent(H: Graph, r: int) -> RationalResolvent:
    if H.n == 0:
        return RationalResolvent(0, r, (), 1)
    try:
        N, d = fraction_free_inverse(shifted_matrix(H, r))
    except SingularMatrixError:
        raise SingularMatrixError(f"{r} is an eigenvalue of H; no resolvent") from None
    return RationalResolvent(H.n, r, tuple(tuple(row) for row in N), d)


def symmetric_eigenvalues(M) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, descending."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if A.size and np.max(np.abs(A - A.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    if A.size == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(A)[::-1]


def adjacency_eigenvalues(G: Graph) -> np.ndarray:
    return symmetric_eigenvalues(np.array(G.matrix(), dtype=float).reshape(G.n, G.n))
