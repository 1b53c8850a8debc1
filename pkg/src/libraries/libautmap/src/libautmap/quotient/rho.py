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

from ..endo.endo import Endo
from ..errors import DimensionMismatch, NotSAut, RingMismatch
from ..finiteaction.action import permutation_of
from ..ring.fields import FieldDesc
from ..tame.factor import FactorKind, TameFactor, TameWord
from ..tame.jvdk import jvdk_decompose, saut_normalize_word
from .mbasis import univariate_coefficients, univariate_poly
from .vspace import VClass, quotient_field, v_class

log = logging.getLogger(__name__)


def _affine_class(field: FieldDesc, factor: TameFactor, modulo_linear: bool) -> VClass:
    """
    Affine factors map to zero unless q = 2, where they map to the class of
    x when they act as an odd permutation of the four points
    """
    if field.cardinality() > 2:
        return VClass.zero(field, modulo_linear)
    sign = permutation_of(factor.endo()).sign()
    if sign == 1:
        return VClass.zero(field, modulo_linear)
    return VClass(field, {(1, 0): field.one()}, modulo_linear)


def _triangular_class(field: FieldDesc, factor: TameFactor, modulo_linear: bool) -> VClass:
    """
    The factor (a x_1 + b, a^-1 x_2 + s(x_1)) maps to the class of a s
    """
    a = factor.scales()[0]
    s = factor.shifts()[1]
    coeffs = [field.mul(a, c) for c in univariate_coefficients(s, var=1)]
    return v_class(univariate_poly(field, coeffs), modulo_linear)


def rho_word(w: TameWord, modulo_linear: bool = False) -> VClass:
    """
    Sums the factor classes of a word whose factors all have Jacobian 1

    Args:
        w: A normalized word in dimension two
        modulo_linear: Take the classes in GF(q)[x]/(V + k x)

    Returns:
        The class of the product
    """
    field = quotient_field(w.field())
    total = VClass.zero(field, modulo_linear)
    for factor in w:
        if factor.kind() == FactorKind.AFFINE:
            total = total + _affine_class(field, factor, modulo_linear)
        else:
            total = total + _triangular_class(field, factor, modulo_linear)
    return total


def rho(f: Endo, modulo_linear: bool = False) -> VClass:
    """
    The homomorphism from SAut of the plane over GF(q) to GF(q)[x]/V.
    The map is factored into affine and triangular pieces, each piece is
    normalized to Jacobian 1 and the piece classes are added

    Args:
        f: A parameter free plane automorphism over a finite field with
            Jacobian 1
        modulo_linear: Post compose with the projection onto
            GF(q)[x]/(V + k x)

    Returns:
        The class of f
    """
    if f.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    if f.dimension() != 2:
        msg = f"The quotient map is defined on the plane, got dimension {f.dimension():d}"
        raise DimensionMismatch(msg)
    quotient_field(f.field())
    jac = f.jacobian_unit()
    if jac is None or jac != 1:
        msg = f"Jacobian {f.jacobian()!s:s} is not 1"
        raise NotSAut(msg)

    word = saut_normalize_word(jvdk_decompose(f))
    result = rho_word(word, modulo_linear)
    log.info(f"Class of {f!s:s} is {result!s:s}")
    return result
