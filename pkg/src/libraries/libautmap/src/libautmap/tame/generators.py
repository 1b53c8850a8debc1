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

from typing import List, Sequence, Union

from ..endo.endo import Endo
from ..endo.matrix import mat_det
from ..errors import DimensionMismatch, InputError, SingularMatrix, VariableLeak
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar
from .factor import TameFactor

Entry = Union[Scalar, MultiPoly, int]


def _as_constant(ring: ParamRing, n: int, value: Entry) -> MultiPoly:
    if isinstance(value, MultiPoly):
        if value.x_degree() > 0:
            msg = "Expected a constant, got a polynomial in x"
            raise InputError(msg)
        return value
    if isinstance(value, int):
        return MultiPoly.integer(ring, n, value)
    return MultiPoly.constant(ring, n, value)


def translation(ring: ParamRing, n: int, vector: Sequence[Entry]) -> Endo:
    """
    Returns the translation (x_1 + v_1, ..., x_n + v_n). The entries may
    be scalars or x-free polynomials, i.e. t * nu_i

    Args:
        ring: The coefficient ring
        n: The dimension
        vector: The translation vector

    Returns:
        The translation
    """
    if len(vector) != n:
        msg = f"Translation vector has {len(vector):d} entries, expected {n:d}"
        raise DimensionMismatch(msg)
    return Endo(
        [
            MultiPoly.variable(ring, n, i + 1) + _as_constant(ring, n, v)
            for i, v in enumerate(vector)
        ]
    )


def linear(ring: ParamRing, n: int, matrix: Sequence[Sequence[Entry]]) -> Endo:
    """
    Returns the linear map x -> M x. Entries may be x-free polynomials

    Args:
        ring: The coefficient ring
        n: The dimension
        matrix: The matrix M

    Returns:
        The linear map
    """
    if len(matrix) != n or any(len(row) != n for row in matrix):
        msg = f"Expected a {n:d}x{n:d} matrix"
        raise DimensionMismatch(msg)
    xs = [MultiPoly.variable(ring, n, j) for j in range(1, n + 1)]
    components = []
    for row in matrix:
        c = MultiPoly.zero(ring, n)
        for m, x in zip(row, xs):
            c = c + _as_constant(ring, n, m) * x
        components.append(c)
    return Endo(components)


def diagonal(ring: ParamRing, n: int, scales: Sequence[Entry]) -> Endo:
    return Endo(
        [
            MultiPoly.variable(ring, n, i + 1) * _as_constant(ring, n, a)
            for i, a in enumerate(scales)
        ]
    )


def elementary(ring: ParamRing, n: int, i: int, s: MultiPoly) -> Endo:
    """
    Returns e_s, the map adding s to the i-th coordinate

    Args:
        ring: The coefficient ring
        n: The dimension
        i: The coordinate, starting at 1
        s: A polynomial not involving x_i

    Returns:
        The elementary map
    """
    if i < 1 or i > n:
        msg = f"Coordinate {i:d} outside 1..{n:d}"
        raise DimensionMismatch(msg)
    if s.involves(i):
        msg = f"Elementary shift involves its own coordinate x{i:d}"
        raise VariableLeak(msg)
    components = [MultiPoly.variable(ring, n, j) for j in range(1, n + 1)]
    components[i - 1] = components[i - 1] + s
    return Endo(components)


def _raw(field: FieldDesc, value) -> object:
    if isinstance(value, Scalar):
        return value.value()
    if isinstance(value, int):
        return field.from_int(value)
    return field.normalize(value)


def make_generator(kind: str, field: FieldDesc, n: int, **data) -> Endo:
    """
    Builds a generator of the tame group over a field

    Args:
        kind: translation (vector), linear (matrix), affine (matrix, vector),
            elementary (i, s) or triangular (scales, shifts)
        field: The base field
        n: The dimension
        **data: The generator data named above

    Returns:
        The generator as an endomorphism
    """
    ring = ParamRing(field)
    if kind == "translation":
        return translation(ring, n, [_raw(field, v) for v in data["vector"]])
    elif kind in ("linear", "affine"):
        matrix = [[_raw(field, m) for m in row] for row in data["matrix"]]
        if len(matrix) != n or any(len(row) != n for row in matrix):
            msg = f"Expected a {n:d}x{n:d} matrix"
            raise DimensionMismatch(msg)
        if field.is_zero(mat_det(field, matrix)):
            msg = "Linear generator matrix is singular"
            raise SingularMatrix(msg)
        vector = [_raw(field, v) for v in data.get("vector", [0] * n)]
        return TameFactor.affine(field, matrix, vector).endo()
    elif kind == "elementary":
        s = data["s"]
        if s.ring() != ring or s.nvars() != n:
            msg = f"Shift must be a polynomial over {ring.tag():s} in {n:d} variables"
            raise InputError(msg)
        return elementary(ring, n, int(data["i"]), s)
    elif kind == "triangular":
        scales: List = [_raw(field, a) for a in data["scales"]]
        return TameFactor.triangular(field, scales, data.get("shifts")).endo()
    else:
        msg = f"Invalid generator kind: {kind:s}"
        raise InputError(msg)
