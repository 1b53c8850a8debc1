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
from typing import List, Optional

from ..endo.endo import Endo
from ..endo.matrix import poly_adjugate, poly_determinant
from ..errors import InvariantViolation, JacobianNotUnit, NotAutomorphism, NotInvertible
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.scalar import Scalar
from .jvdk import jvdk_decompose

log = logging.getLogger(__name__)


def affine_inverse(f: Endo) -> Endo:
    """
    Returns the inverse of the affine part A = f(0) + (Df)(0) x of f.
    The determinant of (Df)(0) must be a unit of the coefficient ring

    Args:
        f: The map whose affine part is inverted

    Returns:
        The map A^-1
    """
    ring = f.ring()
    n = f.dimension()
    matrix, vector = f.linear_coefficients()
    det = poly_determinant(matrix)
    if det.num_terms() != 1:
        msg = f"Linear part has determinant {det!s:s}, which is not a unit"
        raise JacobianNotUnit(msg)
    ((e, c),) = det.terms().items()
    field = f.field()
    if e[0] != 0 and not ring.allows_negative_t():
        msg = f"Linear part has determinant {det!s:s}, which is not a unit"
        raise JacobianNotUnit(msg)
    det_inv = MultiPoly.monomial(ring, n, (-e[0],) + (0,) * n, field.inv(c))

    adj = poly_adjugate(matrix)
    shifted = [MultiPoly.variable(ring, n, j + 1) - vector[j] for j in range(n)]
    components = []
    for i in range(n):
        c_i = MultiPoly.zero(ring, n)
        for j in range(n):
            if not adj[i][j].is_zero():
                c_i = c_i + adj[i][j] * shifted[j]
        components.append(c_i * det_inv)
    return Endo(components)


def default_degree_cap(f: Endo) -> int:
    return max(f.degree(), 1) ** max(f.dimension() - 1, 0)


def _sample_points(field: FieldDesc, n: int, count: int = 4) -> List[List[Scalar]]:
    points = []
    q = field.cardinality()
    for i in range(count):
        coords = [i * (j + 2) + j + 1 for j in range(n)]
        if q is not None:
            coords = [c % q for c in coords]
        points.append([Scalar(field, field.normalize(c)) for c in coords])
    return points


def _closes_on_samples(g: Endo, tangent: Endo) -> bool:
    """
    Necessary condition for g o tangent = id, checked by evaluation at a
    few points (after t = 1 over a parameter ring)
    """
    if tangent.has_t() or g.has_t():
        g = g.specialize_t(1)
        tangent = tangent.specialize_t(1)
    for point in _sample_points(g.field(), g.dimension()):
        if g.evaluate(tangent.evaluate(point)) != point:
            return False
    return True


def _plane_inverse(f: Endo, cap: int) -> Endo:
    """
    Inverts a plane map over a field through its factorization. The check
    g o f = id peels the inverse factors off f one at a time, so every
    intermediate map is a suffix of the word and no larger than f
    """
    try:
        word = jvdk_decompose(f)
    except NotAutomorphism as e:
        msg = f"Map is not invertible: {e!s:s}"
        raise NotInvertible(msg) from None

    residual = f
    for factor in word:
        residual = factor.inverse().endo().compose(residual)
    if not residual.is_identity():
        msg = "Inverse word does not undo the map"
        raise InvariantViolation(msg)

    inverse = word.inverse().evaluate()
    if inverse.degree() > cap:
        msg = f"No inverse of degree at most {cap:d}"
        raise NotInvertible(msg)
    log.info(f"Found inverse of degree {inverse.degree():d} from {len(word):d} factors")
    return inverse


def formal_inverse(f: Endo, degree_cap: Optional[int] = None) -> Endo:
    """
    Inverts a polynomial map with unit Jacobian. After normalizing by the
    affine part, F = A^-1 o f is tangent to the identity and the inverse
    G = x + G_2 + G_3 + ... of F is solved one homogeneous degree at a
    time from G_j = -[(x + G_2 + ... + G_{j-1}) o F]_j, truncated at
    degree j. Once the partial inverse agrees with the identity on sample
    points, G o F = id is checked exactly.

    Plane maps over a field have a unique inverse of degree deg(f), which
    is read off the factorization into affine and triangular factors
    instead.

    Args:
        f: The map to invert
        degree_cap: Largest degree tried for the inverse, defaults to
            deg(f)^(n-1)

    Returns:
        The inverse g with g o f = f o g = id
    """
    if f.jacobian_unit() is None:
        msg = f"Jacobian {f.jacobian()!s:s} is not a unit"
        raise JacobianNotUnit(msg)

    cap = default_degree_cap(f) if degree_cap is None else degree_cap
    if f.dimension() == 2 and not f.ring().has_parameter():
        return _plane_inverse(f, cap)

    ring = f.ring()
    n = f.dimension()
    a_inv = affine_inverse(f)
    tangent = a_inv.compose(f)
    log.debug(f"Inverting a map of degree {f.degree():d} with degree cap {cap:d}")

    g = Endo.identity(ring, n)
    closed = tangent.is_identity()
    degree = 1
    while not closed:
        degree += 1
        if degree > cap:
            msg = f"No inverse of degree at most {cap:d}"
            raise NotInvertible(msg)

        partial = g.compose(tangent, degree_bound=degree).homogeneous_part(degree)
        if all(c.is_zero() for c in partial.components()):
            continue

        g = Endo([gi - pi for gi, pi in zip(g.components(), partial.components())])
        if _closes_on_samples(g, tangent):
            closed = g.compose(tangent).is_identity()
        log.debug(f"Inverse degree {degree:d} reached, closed: {closed!s:s}")

    inverse = g.compose(a_inv)
    if not f.compose(inverse).is_identity():
        msg = "Left inverse is not a right inverse"
        raise InvariantViolation(msg)

    log.info(f"Found inverse of degree {inverse.degree():d}")
    return inverse
