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
Factorization of plane automorphisms into affine and triangular factors by
leading form reduction. Every automorphism of the plane over a field is a
product of such factors, so a failed reduction step proves that the input
is not an automorphism.
"""

import logging

from ..endo.endo import Endo
from ..errors import (
    DimensionMismatch,
    InputError,
    InvariantViolation,
    JacobianNotOne,
    NotAutomorphism,
    RingMismatch,
)
from ..poly.multipoly import MultiPoly
from .factor import FactorKind, TameFactor, TameWord

log = logging.getLogger(__name__)


def _check_plane(f: Endo) -> None:
    if f.dimension() != 2:
        msg = f"Plane factorization needs n = 2, got n = {f.dimension():d}"
        raise DimensionMismatch(msg)
    if f.ring().has_parameter():
        msg = f"Plane factorization works over a field, got {f.ring().tag():s}"
        raise RingMismatch(msg)


def _proportionality(lead2: MultiPoly, power: MultiPoly):
    """
    Returns c with lead2 = c * power, or None
    """
    field = lead2.field()
    e, c2 = next(iter(lead2.terms().items()))
    c1 = power.coefficient(e)
    if field.is_zero(c1):
        return None
    c = field.div(c2, c1)
    if lead2 != power.raw_mul(c):
        return None
    return c


def jvdk_decompose(f: Endo) -> TameWord:
    """
    Writes a plane automorphism as a word of affine and triangular factors.
    The reduction is left greedy: while the degree exceeds one, the
    coordinates are ordered so that deg f_1 <= deg f_2, then the leading
    form of f_2 is cancelled by a multiple of a power of f_1

    Args:
        f: A parameter free map of the plane

    Returns:
        A word whose product is f
    """
    _check_plane(f)
    field = f.field()
    if f.jacobian_unit() is None:
        msg = f"Jacobian {f.jacobian()!s:s} is not a nonzero constant"
        raise NotAutomorphism(msg)

    swap = TameFactor.affine(
        field, [[field.zero(), field.one()], [field.one(), field.zero()]]
    )
    ring = f.ring()
    x1 = MultiPoly.variable(ring, 2, 1)

    factors = []
    f1, f2 = f.components()
    while max(f1.x_degree(), f2.x_degree()) > 1:
        if f1.x_degree() > f2.x_degree():
            f1, f2 = f2, f1
            factors.append(swap)

        d1 = f1.x_degree()
        d2 = f2.x_degree()
        if d1 < 1 or d2 % d1 != 0:
            msg = f"Component degrees {d1:d} and {d2:d} admit no reduction step"
            raise NotAutomorphism(msg)

        k = d2 // d1
        c = _proportionality(f2.leading_form(), f1.leading_form() ** k)
        if c is None:
            msg = f"Leading forms of degrees {d1:d} and {d2:d} are not proportional"
            raise NotAutomorphism(msg)

        # f = (x1, x2 + c x1^k) o (f1, f2 - c f1^k)
        shift = (x1**k).raw_mul(c)
        factors.append(
            TameFactor.triangular(field, [field.one(), field.one()], [MultiPoly.zero(ring, 2), shift])
        )
        f2 = f2 - (f1**k).raw_mul(c)
        log.debug(f"Reduced component degrees ({d1:d}, {d2:d}) -> ({d1:d}, {f2.x_degree():d})")

    try:
        last = TameFactor.from_endo(Endo([f1, f2]), FactorKind.AFFINE)
    except InputError as e:
        msg = f"Remaining affine factor is not invertible: {e!s:s}"
        raise NotAutomorphism(msg) from None
    factors.append(last)

    word = TameWord(field, 2, factors).simplified()
    if not word.verify(f):
        msg = "Factorization does not recompose to the input"
        raise InvariantViolation(msg)
    return word


def is_automorphism(f: Endo) -> bool:
    """
    Decides whether a plane map is an automorphism

    Args:
        f: A parameter free map of the plane

    Returns:
        True if f factors into affine and triangular automorphisms
    """
    try:
        word = jvdk_decompose(f)
    except NotAutomorphism:
        return False
    return word.verify(f)


def saut_normalize_word(w: TameWord) -> TameWord:
    """
    Rewrites a word with Jacobian 1 so that each factor has Jacobian 1, by
    inserting cancelling diagonal maps D(l) = (l x_1, x_2, ...) between the
    factors: w_k becomes D(P_{k-1}) o w_k o D(P_k)^-1 where P_k is the
    product of the first k factor Jacobians

    Args:
        w: A word whose product has Jacobian 1

    Returns:
        The normalized word with the same product
    """
    field = w.field()
    n = w.dimension()
    if w.jacobian() != field.one():
        msg = f"Word has Jacobian {field.format(w.jacobian()):s}, expected 1"
        raise JacobianNotOne(msg)

    out = []
    prefix = field.one()
    for factor in w:
        left = TameFactor.diagonal(field, n, prefix)
        prefix = field.mul(prefix, factor.jacobian())
        right = TameFactor.diagonal(field, n, field.inv(prefix))
        product = left.endo().compose(factor.endo()).compose(right.endo())
        normalized = TameFactor.from_endo(product, factor.kind())
        if normalized.jacobian() != field.one():
            msg = "Normalized factor does not have Jacobian 1"
            raise InvariantViolation(msg)
        out.append(normalized)
    return TameWord(field, n, out)
