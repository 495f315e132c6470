"""Exact Gaussian elimination over Q(√2, √3).

Matrices are lists of rows of FieldElem.  Everything here is division-based
and exact, so ranks, solution coefficients and signatures carry proof force
rather than floating-point confidence.
"""

from __future__ import annotations

from typing import Sequence

from .exactfield import ONE, ZERO, FieldElem

Row = list[FieldElem]
Matrix = list[Row]


def _copy(rows: Sequence[Sequence[FieldElem]]) -> Matrix:
    return [list(row) for row in rows]


def echelon(rows: Sequence[Sequence[FieldElem]]) -> tuple[Matrix, list[int]]:
    """Row echelon form and the list of pivot column indices."""
    mat = _copy(rows)
    if not mat:
        return mat, []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][col].inv()
        mat[r] = [entry * inv for entry in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [entry - factor * lead
                          for entry, lead in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence[FieldElem]]) -> int:
    return len(echelon(rows)[1])


def solve_in_span(vectors: Sequence[Sequence[FieldElem]],
                  target: Sequence[FieldElem]
                  ) -> tuple[list[FieldElem] | None, int | None]:
    """Express target as a combination of the given coordinate vectors.

    Returns (coefficients, None) when target lies in the span, else
    (None, pivot_row) where pivot_row indexes the echelon row whose pivot
    sits in the target column, witnessing the rank jump.
    """
    dim = len(target)
    for v in vectors:
        if len(v) != dim:
            raise ValueError("span vectors and target must share a dimension")
    augmented = [[vectors[j][i] for j in range(len(vectors))] + [target[i]]
                 for i in range(dim)]
    mat, pivots = echelon(augmented)
    if len(vectors) in pivots:
        return None, pivots.index(len(vectors))
    coeffs = [ZERO] * len(vectors)
    for row_index, col in enumerate(pivots):
        coeffs[col] = mat[row_index][len(vectors)]
    return coeffs, None


def invert(rows: Sequence[Sequence[FieldElem]]) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    augmented = [list(row) + [ONE if i == j else ZERO for j in range(n)]
                 for i, row in enumerate(rows)]
    mat, pivots = echelon(augmented)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in mat]


def signature(gram: Sequence[Sequence[FieldElem]]) -> tuple[int, int, int]:
    """Inertia (positive, negative, null) of a symmetric matrix.

    Congruence diagonalization: diagonal pivots are cleared symmetrically,
    and a zero diagonal with a nonzero off-diagonal entry is repaired by the
    hyperbolic basis change uᵢ ← uᵢ + uⱼ before pivoting.
    """
    n = len(gram)
    mat = _copy(gram)
    for i in range(n):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ValueError("signature needs a symmetric matrix")
    pos = neg = null = 0
    for k in range(n):
        if not mat[k][k]:
            swap = next((j for j in range(k + 1, n) if mat[j][j]), None)
            if swap is not None:
                _swap_symmetric(mat, k, swap)
            else:
                pair = next(((i, j) for i in range(k, n)
                             for j in range(i + 1, n) if mat[i][j]), None)
                if pair is None:
                    null += n - k
                    break
                i, j = pair
                _add_symmetric(mat, i, j)
                if i != k:
                    _swap_symmetric(mat, k, i)
        pivot = mat[k][k]
        for i in range(k + 1, n):
            if mat[i][k]:
                factor = mat[i][k] / pivot
                for j in range(n):
                    mat[i][j] = mat[i][j] - factor * mat[k][j]
                for j in range(n):
                    mat[j][i] = mat[j][i] - factor * mat[j][k]
        if pivot.sign() > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, null


def _swap_symmetric(mat: Matrix, i: int, j: int) -> None:
    mat[i], mat[j] = mat[j], mat[i]
    for row in mat:
        row[i], row[j] = row[j], row[i]


def _add_symmetric(mat: Matrix, i: int, j: int) -> None:
    n = len(mat)
    for col in range(n):
        mat[i][col] = mat[i][col] + mat[j][col]
    for row in range(n):
        mat[row][i] = mat[row][i] + mat[row][j]
