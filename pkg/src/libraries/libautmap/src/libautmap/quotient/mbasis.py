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
Univariate polynomials over a finite field and their expansion in the
basis m_{i,j} = x^i R^j, R = x^q - x, 0 <= i <= q - 1. Coefficient lists
hold raw values, constant term first.
"""

from typing import Dict, List, Tuple

from ..errors import InputError, RingMismatch
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, RawValue
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar

Coefficients = List[RawValue]
MCoordinates = Dict[Tuple[int, int], RawValue]


def trim(field: FieldDesc, a: Coefficients) -> Coefficients:
    a = list(a)
    while a and field.is_zero(a[-1]):
        a.pop()
    return a


def add(field: FieldDesc, a: Coefficients, b: Coefficients) -> Coefficients:
    size = max(len(a), len(b))
    a = list(a) + [field.zero()] * (size - len(a))
    b = list(b) + [field.zero()] * (size - len(b))
    return trim(field, [field.add(x, y) for x, y in zip(a, b)])


def mul(field: FieldDesc, a: Coefficients, b: Coefficients) -> Coefficients:
    if not a or not b:
        return []
    result = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            result[i + j] = field.add(result[i + j], field.mul(x, y))
    return trim(field, result)


def divmod_monic(
    field: FieldDesc, a: Coefficients, b: Coefficients
) -> Tuple[Coefficients, Coefficients]:
    """
    Division with remainder by a monic polynomial

    Args:
        field: The field
        a: The dividend
        b: A monic divisor

    Returns:
        Tuple of the quotient and the remainder
    """
    a = trim(field, a)
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    quotient = [field.zero()] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if field.is_zero(c):
            continue
        quotient[k - db] = c
        for i, y in enumerate(b):
            a[k - db + i] = field.sub(a[k - db + i], field.mul(c, y))
    return trim(field, quotient), trim(field, a[:db])


def artin_schreier(field: FieldDesc) -> Coefficients:
    """
    Returns R = x^q - x, which vanishes on every element of the field
    """
    q = field.require_finite("R = x^q - x")
    r = [field.zero()] * (q + 1)
    r[q] = field.one()
    r[1] = field.neg(field.one())
    return r


def univariate_coefficients(s: MultiPoly, var: int = 1) -> Coefficients:
    """
    Reads a polynomial in the single variable x_var as a coefficient list

    Args:
        s: A parameter free polynomial involving only x_var
        var: The variable index

    Returns:
        The coefficients, constant term first
    """
    if s.has_t():
        msg = "Expected a parameter free polynomial"
        raise RingMismatch(msg)
    field = s.field()
    result: Coefficients = []
    for e, c in s.terms().items():
        if any(k for i, k in enumerate(e[1:], start=1) if i != var):
            msg = f"Expected a polynomial in x{var:d} only, got {s!s:s}"
            raise InputError(msg)
        d = e[var]
        if d >= len(result):
            result += [field.zero()] * (d + 1 - len(result))
        result[d] = field.add(result[d], c)
    return trim(field, result)


def univariate_poly(field: FieldDesc, coeffs: Coefficients, nvars: int = 1, var: int = 1) -> MultiPoly:
    ring = ParamRing(field)
    terms = {}
    for d, c in enumerate(coeffs):
        if field.is_zero(c):
            continue
        e = [0] * (nvars + 1)
        e[var] = d
        terms[tuple(e)] = c
    return MultiPoly(ring, nvars, terms)


def to_m_basis(s: MultiPoly) -> Dict[Tuple[int, int], Scalar]:
    """
    Expands a polynomial of GF(q)[x] on the basis m_{i,j} = x^i R^j by
    repeated division by R

    Args:
        s: A polynomial in x_1 only

    Returns:
        The nonzero coordinates, keyed by (i, j)
    """
    field = s.field()
    return {k: Scalar(field, v) for k, v in raw_m_coordinates(field, univariate_coefficients(s)).items()}


def raw_m_coordinates(field: FieldDesc, coeffs: Coefficients) -> MCoordinates:
    r = artin_schreier(field)
    out: MCoordinates = {}
    j = 0
    a = trim(field, coeffs)
    while a:
        a, rem = divmod_monic(field, a, r)
        for i, c in enumerate(rem):
            if not field.is_zero(c):
                out[(i, j)] = c
        j += 1
    return out


def raw_from_m_coordinates(field: FieldDesc, coords: MCoordinates) -> Coefficients:
    r = artin_schreier(field)
    result: Coefficients = []
    r_powers = [[field.one()]]
    for (i, j), c in sorted(coords.items()):
        if field.is_zero(c):
            continue
        while len(r_powers) <= j:
            r_powers.append(mul(field, r_powers[-1], r))
        monomial = [field.zero()] * i + [c]
        result = add(field, result, mul(field, monomial, r_powers[j]))
    return result


def from_m_basis(field: FieldDesc, coords: Dict[Tuple[int, int], object], nvars: int = 1) -> MultiPoly:
    """
    Recomposes sum c_{i,j} x^i R^j, the inverse of to_m_basis

    Args:
        field: The finite field
        coords: Coefficients keyed by (i, j), Scalars or raw values
        nvars: Number of variables of the result, which lies in x_1

    Returns:
        The polynomial
    """
    q = field.require_finite("from_m_basis")
    raw = {}
    for (i, j), c in coords.items():
        if not 0 <= i < q or j < 0:
            msg = f"Basis index ({i:d}, {j:d}) outside 0 <= i < {q:d}, j >= 0"
            raise InputError(msg)
        raw[(i, j)] = c.value() if isinstance(c, Scalar) else field.normalize(c)
    return univariate_poly(field, raw_from_m_coordinates(field, raw), nvars)
