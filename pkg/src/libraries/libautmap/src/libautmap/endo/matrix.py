###################################################################################################
# MIT License
#
# Copyright (c) 2024 The autmap developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
###################################################################################################

"""
Small dense matrices over a field (raw values) and over a polynomial ring.
Sizes here are the dimension of the affine space, so plain lists suffice.
"""

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, InputError, SingularMatrix
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, RawValue
from ..settings import max_determinant_dim

RawMatrix = List[List[RawValue]]
PolyMatrix = List[List[MultiPoly]]


def identity_matrix(field: FieldDesc, n: int) -> RawMatrix:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def check_square(matrix: Sequence[Sequence], n: Optional[int] = None) -> int:
    size = len(matrix)
    if n is not None and size != n:
        msg = f"Expected a {n:d}x{n:d} matrix, got {size:d} rows"
        raise DimensionMismatch(msg)
    for row in matrix:
        if len(row) != size:
            msg = "Matrix is not square"
            raise DimensionMismatch(msg)
    return size


def mat_mul(field: FieldDesc, a: RawMatrix, b: RawMatrix) -> RawMatrix:
    n = len(a)
    m = len(b[0])
    result = []
    for i in range(n):
        row = []
        for j in range(m):
            s = field.zero()
            for k in range(len(b)):
                s = field.add(s, field.mul(a[i][k], b[k][j]))
            row.append(s)
        result.append(row)
    return result


def mat_vec(field: FieldDesc, a: RawMatrix, v: Sequence[RawValue]) -> List[RawValue]:
    return [row[0] for row in mat_mul(field, a, [[vi] for vi in v])]


def _row_reduce(field: FieldDesc, matrix: RawMatrix, augment: Optional[RawMatrix]):
    """
    Gauss-Jordan elimination. Returns the determinant and, when augment is
    given, the augmented part after reduction
    """
    n = check_square(matrix)
    a = [list(row) for row in matrix]
    b = [list(row) for row in augment] if augment is not None else None
    det = field.one()

    for col in range(n):
        pivot = next((r for r in range(col, n) if not field.is_zero(a[r][col])), None)
        if pivot is None:
            return field.zero(), None
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            if b is not None:
                b[col], b[pivot] = b[pivot], b[col]
            det = field.neg(det)

        p = a[col][col]
        det = field.mul(det, p)
        p_inv = field.inv(p)
        a[col] = [field.mul(x, p_inv) for x in a[col]]
        if b is not None:
            b[col] = [field.mul(x, p_inv) for x in b[col]]

        for r in range(n):
            if r == col or field.is_zero(a[r][col]):
                continue
            factor = a[r][col]
            a[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(a[r], a[col])]
            if b is not None:
                b[r] = [
                    field.sub(x, field.mul(factor, y)) for x, y in zip(b[r], b[col])
                ]

    return det, b


def mat_det(field: FieldDesc, matrix: RawMatrix) -> RawValue:
    return _row_reduce(field, matrix, None)[0]


def mat_inv(field: FieldDesc, matrix: RawMatrix) -> RawMatrix:
    """
    Inverse of a square matrix over a field

    Args:
        field: The field of the entries
        matrix: The matrix

    Returns:
        The inverse matrix
    """
    n = check_square(matrix)
    det, inverse = _row_reduce(field, matrix, identity_matrix(field, n))
    if inverse is None or field.is_zero(det):
        msg = "Matrix is singular"
        raise SingularMatrix(msg)
    return inverse


def poly_determinant(matrix: PolyMatrix) -> MultiPoly:
    """
    Determinant of a matrix of polynomials by cofactor expansion along the
    first row, memoized on the remaining column sets

    Args:
        matrix: Square matrix of polynomials over a common ring

    Returns:
        The determinant, expanded
    """
    n = check_square(matrix)
    if n == 0:
        msg = "Empty matrix"
        raise InputError(msg)
    if n > max_determinant_dim():
        msg = f"Cofactor determinants are limited to dimension {max_determinant_dim():d}, got {n:d}"
        raise DimensionMismatch(msg)

    ring = matrix[0][0].ring()
    nvars = matrix[0][0].nvars()

    @lru_cache(maxsize=None)
    def minor(row: int, columns: Tuple[int, ...]) -> MultiPoly:
        if row == n:
            return MultiPoly.one(ring, nvars)
        total = MultiPoly.zero(ring, nvars)
        for k, col in enumerate(columns):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            rest = columns[:k] + columns[k + 1 :]
            term = entry * minor(row + 1, rest)
            total = total - term if k % 2 else total + term
        return total

    return minor(0, tuple(range(n)))


def poly_adjugate(matrix: PolyMatrix) -> PolyMatrix:
    """
    Adjugate of a polynomial matrix, so that adj(M) M = det(M) I

    Args:
        matrix: Square matrix of polynomials

    Returns:
        The adjugate
    """
    n = check_square(matrix)
    ring = matrix[0][0].ring()
    nvars = matrix[0][0].nvars()
    if n == 1:
        return [[MultiPoly.one(ring, nvars)]]

    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [matrix[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            cofactor = poly_determinant(sub)
            adj[j][i] = -cofactor if (i + j) % 2 else cofactor
    return adj


def poly_mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n = len(a)
    m = len(b[0])
    ring = a[0][0].ring()
    nvars = a[0][0].nvars()
    result = []
    for i in range(n):
        row = []
        for j in range(m):
            s = MultiPoly.zero(ring, nvars)
            for k in range(len(b)):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                s = s + a[i][k] * b[k][j]
            row.append(s)
        result.append(row)
    return result
