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

import logging
from enum import Enum
from typing import List, Optional, Sequence

from ..endo.endo import Endo
from ..endo.matrix import identity_matrix, mat_det, mat_inv, mat_mul, mat_vec
from ..errors import DimensionMismatch, InputError, SingularMatrix, ZeroDiagonal
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, RawValue
from ..ring.paramring import ParamRing, RingKind

log = logging.getLogger(__name__)


class FactorKind(Enum):
    """
    Enumerated type for the two kinds of tame factors
    """

    AFFINE = 1
    TRIANGULAR = 2

    def label(self) -> str:
        return "affine" if self == FactorKind.AFFINE else "triangular"


class TameFactor:
    """
    An affine map x -> Mx + v or a triangular map
    (a_1 x_1 + b_1, a_2 x_2 + b_2(x_1), ..., a_n x_n + b_n(x_1, ..., x_{n-1}))
    over a field
    """

    def __init__(
        self,
        kind: FactorKind,
        field: FieldDesc,
        n: int,
        matrix: Optional[List[List[RawValue]]] = None,
        vector: Optional[List[RawValue]] = None,
        scales: Optional[List[RawValue]] = None,
        shifts: Optional[List[MultiPoly]] = None,
    ):
        """
        Constructor for TameFactor. Prefer TameFactor.affine and
        TameFactor.triangular

        Args:
            kind: Affine or triangular
            field: The base field
            n: The dimension
            matrix: Affine matrix M, raw values
            vector: Affine translation v, raw values
            scales: Triangular diagonal a_i, raw values
            shifts: Triangular polynomials b_i
        """
        self.__kind = kind
        self.__field = field
        self.__n = n
        self.__ring = ParamRing(field, RingKind.NO_PARAM)
        self.__endo = None

        if kind == FactorKind.AFFINE:
            if matrix is None or len(matrix) != n or any(len(r) != n for r in matrix):
                msg = f"Affine factor needs a {n:d}x{n:d} matrix"
                raise DimensionMismatch(msg)
            vector = list(vector) if vector is not None else [field.zero()] * n
            if len(vector) != n:
                msg = f"Affine factor needs a vector of length {n:d}"
                raise DimensionMismatch(msg)
            self.__matrix = [[field.normalize(x) for x in row] for row in matrix]
            self.__vector = [field.normalize(x) for x in vector]
            self.__det = mat_det(field, self.__matrix)
            if field.is_zero(self.__det):
                msg = "Affine factor matrix is singular"
                raise SingularMatrix(msg)
        else:
            if scales is None or len(scales) != n:
                msg = f"Triangular factor needs {n:d} diagonal scalars"
                raise DimensionMismatch(msg)
            shifts = list(shifts) if shifts is not None else []
            shifts += [MultiPoly.zero(self.__ring, n)] * (n - len(shifts))
            if len(shifts) != n:
                msg = f"Triangular factor needs {n:d} shift polynomials"
                raise DimensionMismatch(msg)
            self.__scales = [field.normalize(a) for a in scales]
            if any(field.is_zero(a) for a in self.__scales):
                msg = "Triangular factor has a zero diagonal entry"
                raise ZeroDiagonal(msg)
            for i, b in enumerate(shifts, start=1):
                if b.ring() != self.__ring or b.nvars() != n:
                    msg = f"Shift b_{i:d} is not a polynomial over {self.__ring.tag():s} in {n:d} variables"
                    raise InputError(msg)
                if any(b.involves(j) for j in range(i, n + 1)):
                    msg = f"Shift b_{i:d} may only involve x_1..x_{i - 1:d}"
                    raise InputError(msg)
            self.__shifts = shifts
            self.__det = field.one()
            for a in self.__scales:
                self.__det = field.mul(self.__det, a)

    @staticmethod
    def affine(field: FieldDesc, matrix, vector=None) -> "TameFactor":
        return TameFactor(FactorKind.AFFINE, field, len(matrix), matrix=matrix, vector=vector)

    @staticmethod
    def triangular(field: FieldDesc, scales, shifts=None) -> "TameFactor":
        return TameFactor(
            FactorKind.TRIANGULAR, field, len(scales), scales=scales, shifts=shifts
        )

    @staticmethod
    def diagonal(field: FieldDesc, n: int, first: RawValue) -> "TameFactor":
        """
        Returns the affine factor (first * x_1, x_2, ..., x_n)
        """
        matrix = identity_matrix(field, n)
        matrix[0][0] = first
        return TameFactor.affine(field, matrix)

    @staticmethod
    def from_endo(f: Endo, kind: FactorKind) -> "TameFactor":
        """
        Reads the factor data back from a parameter free map of the given
        shape

        Args:
            f: The map, affine or triangular
            kind: Which shape to read

        Returns:
            The factor
        """
        field = f.field()
        n = f.dimension()
        if f.has_t():
            msg = "Tame factors are parameter free"
            raise InputError(msg)
        if kind == FactorKind.AFFINE:
            if f.degree() > 1:
                msg = "Map is not affine"
                raise InputError(msg)
            matrix, vector = f.linear_part()
            return TameFactor.affine(
                field,
                [[s.value() for s in row] for row in matrix],
                [s.value() for s in vector],
            )

        scales = []
        shifts = []
        for i, c in enumerate(f.components(), start=1):
            e = [0] * (n + 1)
            e[i] = 1
            a = c.coefficient(tuple(e))
            x_i = MultiPoly.variable(c.ring(), n, i)
            scales.append(a)
            shifts.append(c - x_i.raw_mul(a))
        return TameFactor.triangular(field, scales, shifts)

    def kind(self) -> FactorKind:
        return self.__kind

    def field(self) -> FieldDesc:
        return self.__field

    def dimension(self) -> int:
        return self.__n

    def matrix(self) -> List[List[RawValue]]:
        return self.__matrix

    def vector(self) -> List[RawValue]:
        return self.__vector

    def scales(self) -> List[RawValue]:
        return self.__scales

    def shifts(self) -> List[MultiPoly]:
        return self.__shifts

    def jacobian(self) -> RawValue:
        return self.__det

    def endo(self) -> Endo:
        """
        Returns the factor as an endomorphism (cached)

        Returns:
            The map
        """
        if self.__endo is not None:
            return self.__endo

        n = self.__n
        ring = self.__ring
        xs = [MultiPoly.variable(ring, n, i) for i in range(1, n + 1)]
        if self.__kind == FactorKind.AFFINE:
            components = []
            for row, v in zip(self.__matrix, self.__vector):
                c = MultiPoly.constant(ring, n, v)
                for m, x in zip(row, xs):
                    c = c + x.raw_mul(m)
                components.append(c)
        else:
            components = [
                x.raw_mul(a) + b for x, a, b in zip(xs, self.__scales, self.__shifts)
            ]
        self.__endo = Endo(components)
        return self.__endo

    def inverse(self) -> "TameFactor":
        field = self.__field
        if self.__kind == FactorKind.AFFINE:
            m_inv = mat_inv(field, self.__matrix)
            v = mat_vec(field, m_inv, self.__vector)
            return TameFactor.affine(field, m_inv, [field.neg(x) for x in v])

        n = self.__n
        ring = self.__ring
        images: List[MultiPoly] = []
        shifts = []
        for i in range(n):
            a_inv = field.inv(self.__scales[i])
            known = images + [MultiPoly.zero(ring, n)] * (n - i)
            b = self.__shifts[i].substitute(known)
            shift = b.raw_mul(field.neg(a_inv))
            shifts.append(shift)
            images.append(MultiPoly.variable(ring, n, i + 1).raw_mul(a_inv) + shift)
        scales = [field.inv(a) for a in self.__scales]
        return TameFactor.triangular(field, scales, shifts)

    def is_identity(self) -> bool:
        return self.endo().is_identity()

    def degree(self) -> int:
        return max(self.endo().degree(), 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TameFactor):
            return NotImplemented
        return self.__kind == other.kind() and self.endo() == other.endo()

    def __hash__(self) -> int:
        return hash((self.__kind, self.endo()))

    def __repr__(self) -> str:
        return f"TameFactor({self.__kind.label():s}, {self.endo()!s:s})"

    def to_dict(self) -> dict:
        field = self.__field
        if self.__kind == FactorKind.AFFINE:
            return {
                "kind": "affine",
                "matrix": [[field.format(x) for x in row] for row in self.__matrix],
                "vector": [field.format(x) for x in self.__vector],
                "map": str(self.endo()),
            }
        return {
            "kind": "triangular",
            "scales": [field.format(a) for a in self.__scales],
            "shifts": [str(b) for b in self.__shifts],
            "map": str(self.endo()),
        }


def merge_affine(a: TameFactor, b: TameFactor) -> TameFactor:
    """
    Returns the affine factor a o b

    Args:
        a: The outer affine factor
        b: The inner affine factor

    Returns:
        The product
    """
    field = a.field()
    matrix = mat_mul(field, a.matrix(), b.matrix())
    vector = [
        field.add(x, y) for x, y in zip(mat_vec(field, a.matrix(), b.vector()), a.vector())
    ]
    return TameFactor.affine(field, matrix, vector)


class TameWord:
    """
    An ordered product f_1 o f_2 o ... o f_k of tame factors. The empty word
    is the identity
    """

    def __init__(self, field: FieldDesc, n: int, factors: Sequence[TameFactor] = ()):
        """
        Constructor for TameWord

        Args:
            field: The base field
            n: The dimension
            factors: The factors, leftmost (applied last) first
        """
        for f in factors:
            if f.field() != field or f.dimension() != n:
                msg = "Word factors must share field and dimension"
                raise DimensionMismatch(msg)
        self.__field = field
        self.__n = n
        self.__factors = list(factors)

    def field(self) -> FieldDesc:
        return self.__field

    def dimension(self) -> int:
        return self.__n

    def factors(self) -> List[TameFactor]:
        return list(self.__factors)

    def __len__(self) -> int:
        return len(self.__factors)

    def __iter__(self):
        return iter(self.__factors)

    def evaluate(self) -> Endo:
        """
        Multiplies the word out

        Returns:
            The map f_1 o f_2 o ... o f_k
        """
        result = Endo.identity(ParamRing(self.__field), self.__n)
        for factor in reversed(self.__factors):
            result = factor.endo().compose(result)
        return result

    def inverse(self) -> "TameWord":
        return TameWord(
            self.__field, self.__n, [f.inverse() for f in reversed(self.__factors)]
        )

    def jacobian(self) -> RawValue:
        field = self.__field
        value = field.one()
        for f in self.__factors:
            value = field.mul(value, f.jacobian())
        return value

    def simplified(self) -> "TameWord":
        """
        Merges adjacent affine factors and drops identity factors

        Returns:
            The simplified word with the same product
        """
        out: List[TameFactor] = []
        for f in self.__factors:
            if out and f.kind() == FactorKind.AFFINE and out[-1].kind() == FactorKind.AFFINE:
                out[-1] = merge_affine(out[-1], f)
            else:
                out.append(f)
            if out[-1].is_identity():
                out.pop()
        return TameWord(self.__field, self.__n, out)

    def verify(self, f: Endo) -> bool:
        return self.evaluate() == f

    def to_dict(self) -> dict:
        return {
            "field": self.__field.tag(),
            "dimension": self.__n,
            "factors": [f.to_dict() for f in self.__factors],
        }


def evaluate(w: TameWord) -> Endo:
    return w.evaluate()


def inverse_word(w: TameWord) -> TameWord:
    return w.inverse()
