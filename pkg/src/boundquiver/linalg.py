"""Dense exact linear algebra over a :class:`~boundquiver.field.Field`.

Vectors are tuples of scalars, matrices are sequences of row tuples.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .field import Field, Scalar

Vector = Tuple[Scalar, ...]


def rref(rows: Sequence[Sequence[Scalar]], field: Field, ncols: int | None = None) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are leftmost, so the result is unique for the row space.
    """
    mat = [list(r) for r in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not field.is_zero(mat[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def reduce_vector(vec: Sequence[Scalar], basis: Sequence[Vector], pivots: Sequence[int], field: Field) -> Vector:
    """Remainder of ``vec`` modulo an RREF basis; zero iff ``vec`` is in the span."""
    out = list(vec)
    for row, c in zip(basis, pivots):
        f = out[c]
        if not field.is_zero(f):
            out = [field.sub(x, field.mul(f, y)) for x, y in zip(out, row)]
    return tuple(out)


def in_span(vec: Sequence[Scalar], basis: Sequence[Vector], pivots: Sequence[int], field: Field) -> bool:
    return all(field.is_zero(x) for x in reduce_vector(vec, basis, pivots, field))


def rank(rows: Sequence[Sequence[Scalar]], field: Field) -> int:
    return len(rref(rows, field)[0])


def nullspace(rows: Sequence[Sequence[Scalar]], field: Field, ncols: int) -> List[Vector]:
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    basis, pivots = rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        x = [field.zero()] * ncols
        x[fc] = field.one()
        for row, pc in zip(basis, pivots):
            x[pc] = field.neg(row[fc])
        out.append(tuple(x))
    return out


def left_nullspace(rows: Sequence[Sequence[Scalar]], field: Field) -> List[Vector]:
    """Basis of ``{c : c M = 0}``."""
    if not rows:
        return []
    ncols = len(rows[0])
    cols = [tuple(r[j] for r in rows) for j in range(ncols)]
    return nullspace(cols, field, len(rows))


def combine(coeffs: Sequence[Scalar], rows: Sequence[Vector], field: Field, ncols: int) -> Vector:
    out = [field.zero()] * ncols
    for c, row in zip(coeffs, rows):
        if field.is_zero(c):
            continue
        out = [field.add(x, field.mul(c, y)) for x, y in zip(out, row)]
    return tuple(out)


def inverse(mat: Sequence[Sequence[Scalar]], field: Field) -> List[Vector] | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    n = len(mat)
    aug = [list(mat[i]) + [field.one() if j == i else field.zero() for j in range(n)] for i in range(n)]
    red, pivots = rref(aug, field, n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [tuple(row[n:]) for row in red]
