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
Reproducible random tame words, used by the property tests and by the
command line tools that take a --seed.
"""

from fractions import Fraction
from typing import List

import numpy as np

from ..endo.matrix import mat_det
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, RawValue
from ..ring.paramring import ParamRing
from .factor import TameFactor, TameWord

RATIONAL_SAMPLES = (-2, -1, 1, 2)


def random_scalar(field: FieldDesc, rng: np.random.Generator, nonzero=False) -> RawValue:
    """
    Draws a scalar: small integers over QQ, uniform over a finite field

    Args:
        field: The field
        rng: The random generator
        nonzero: Exclude zero

    Returns:
        The raw value
    """
    if not field.is_finite():
        choices = RATIONAL_SAMPLES if nonzero else (0, *RATIONAL_SAMPLES)
        return Fraction(int(rng.choice(choices)))
    q = field.cardinality()
    low = 1 if nonzero else 0
    return field.normalize(int(rng.integers(low, q)))


def random_poly(
    field: FieldDesc, n: int, nvars_used: int, degree: int, rng: np.random.Generator
) -> MultiPoly:
    """
    Draws a polynomial in x_1..x_{nvars_used} of degree at most degree
    with up to three terms

    Args:
        field: The field
        n: The number of variables of the ambient ring
        nvars_used: Only x_1..x_{nvars_used} appear
        degree: The degree bound
        rng: The random generator

    Returns:
        The polynomial
    """
    ring = ParamRing(field)
    p = MultiPoly.zero(ring, n)
    if nvars_used == 0:
        return MultiPoly.constant(ring, n, random_scalar(field, rng))
    for _ in range(int(rng.integers(1, 4))):
        e = [0] * (n + 1)
        for _ in range(int(rng.integers(0, degree + 1))):
            e[int(rng.integers(1, nvars_used + 1))] += 1
        p = p + MultiPoly.monomial(ring, n, tuple(e), random_scalar(field, rng))
    return p


def _random_matrix(field: FieldDesc, n: int, rng, special: bool) -> List[List[RawValue]]:
    while True:
        matrix = [[random_scalar(field, rng) for _ in range(n)] for _ in range(n)]
        det = mat_det(field, matrix)
        if field.is_zero(det):
            continue
        if special:
            det_inv = field.inv(det)
            matrix[0] = [field.mul(x, det_inv) for x in matrix[0]]
        return matrix


def random_factor(
    field: FieldDesc, n: int, triangular: bool, degree: int, rng, special=False
) -> TameFactor:
    if not triangular:
        matrix = _random_matrix(field, n, rng, special)
        vector = [random_scalar(field, rng) for _ in range(n)]
        return TameFactor.affine(field, matrix, vector)

    scales = [random_scalar(field, rng, nonzero=True) for _ in range(n)]
    if special:
        product = field.one()
        for a in scales[:-1]:
            product = field.mul(product, a)
        scales[-1] = field.inv(product)
    shifts = [random_poly(field, n, i, degree, rng) for i in range(n)]
    return TameFactor.triangular(field, scales, shifts)


def random_word(
    field: FieldDesc,
    n: int,
    length: int,
    degree: int,
    rng: np.random.Generator,
    special: bool = False,
) -> TameWord:
    """
    Draws a word alternating affine and triangular factors, starting with
    either kind

    Args:
        field: The base field
        n: The dimension
        length: The number of factors
        degree: Degree bound of the triangular shifts
        rng: The random generator, i.e. numpy.random.default_rng(seed)
        special: Draw every factor with Jacobian 1

    Returns:
        The word
    """
    triangular = bool(rng.integers(0, 2))
    factors = []
    for _ in range(length):
        factors.append(random_factor(field, n, triangular, degree, rng, special))
        triangular = not triangular
    return TameWord(field, n, factors)
