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
from typing import List, Sequence

from ..endo.endo import Endo
from ..errors import (
    DegenerateGeometry,
    DimensionMismatch,
    DoesNotFixOrigin,
    FixedPointMissing,
    InvariantViolation,
    JacobianNotUnit,
    RingMismatch,
)
from ..poly.multipoly import MultiPoly
from ..ring.paramring import RingKind
from ..ring.scalar import Scalar
from ..tame.generators import diagonal, linear, translation
from ..tame.inverse import formal_inverse
from .degenerate import DEFAULT_SAMPLES, usable_samples

log = logging.getLogger(__name__)

SLN_DEGREE_WARNING = 64


class SlnExtraction:
    """
    Result of extracting an elementary matrix from an automorphism moving a
    point: the affine normalization, the origin fixing map f, its Alexander
    family and the limit matrix
    """

    def __init__(self, normalization, normalized, f, family, matrix, sample_checks):
        self.__normalization = normalization
        self.__normalized = normalized
        self.__f = f
        self.__family = family
        self.__matrix = matrix
        self.__sample_checks = sample_checks

    def normalization(self) -> Endo:
        return self.__normalization

    def normalized(self) -> Endo:
        return self.__normalized

    def f(self) -> Endo:
        return self.__f

    def family(self) -> Endo:
        return self.__family

    def matrix(self) -> List[List[Scalar]]:
        return self.__matrix

    def sample_checks(self):
        return self.__sample_checks

    def is_elementary(self) -> bool:
        """
        Returns True if the limit matrix is the identity plus one nonzero
        off diagonal entry

        Returns:
            The verdict
        """
        off = 0
        for i, row in enumerate(self.__matrix):
            for j, x in enumerate(row):
                if i == j and x != 1:
                    return False
                if i != j and not x.is_zero():
                    off += 1
        return off == 1

    def to_dict(self) -> dict:
        return {
            "normalization": str(self.__normalization),
            "normalized_input": str(self.__normalized),
            "f": str(self.__f),
            "family": str(self.__family),
            "limit_matrix": [[str(x) for x in row] for row in self.__matrix],
            "elementary": self.is_elementary(),
            "sample_checks": [
                {"t0": t0, "verified": ok} for t0, ok in self.__sample_checks
            ],
        }


def alexander_family(f: Endo) -> Endo:
    """
    Conjugates an origin fixing automorphism by the scaling (t x_1, ...,
    t x_n). The result g_i = sum_j t^(j-1) f_{i,j} is a family over k[t]
    with g(1) = f and g(0) the linear part of f

    Args:
        f: A parameter free map fixing the origin, with unit Jacobian

    Returns:
        The family g over k[t]
    """
    if f.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    if not f.fixes_origin():
        msg = "The map does not fix the origin"
        raise DoesNotFixOrigin(msg)
    if f.jacobian_unit() is None:
        msg = f"Jacobian {f.jacobian()!s:s} is not a unit"
        raise JacobianNotUnit(msg)

    n = f.dimension()
    ring = f.ring().with_kind(RingKind.POLY_T)
    components = []
    for c in f.components():
        g_i = MultiPoly.zero(ring, n)
        for j, part in c.homogeneous_parts().items():
            g_i = g_i + part.with_ring(ring) * MultiPoly.parameter(ring, n, j - 1)
        components.append(g_i)
    g = Endo(components)

    laurent = ring.with_kind(RingKind.LAURENT_T)
    t = MultiPoly.parameter(laurent, n)
    alpha = diagonal(laurent, n, [t] * n)
    alpha_inv = diagonal(laurent, n, [MultiPoly.parameter(laurent, n, -1)] * n)
    conjugate = alpha_inv.compose(f.with_ring(laurent).compose(alpha))
    if conjugate.with_ring(ring) != g:
        msg = "Scaling conjugate does not match the homogeneous expansion"
        log.error(msg)
        raise InvariantViolation(msg)

    matrix, _ = f.linear_part()
    expected_limit = linear(f.ring(), n, matrix)
    if g.specialize_t(0) != expected_limit or g.specialize_t(1) != f:
        msg = "Alexander family has the wrong end points"
        log.error(msg)
        raise InvariantViolation(msg)
    return g


def _point(field, values: Sequence) -> List[Scalar]:
    return [v if isinstance(v, Scalar) else Scalar(field, field.from_fraction(v)) for v in values]


def _normalization(field, ring, p: List[Scalar], q: List[Scalar]) -> Endo:
    """
    The affine map A with A(0) = p and A(e_1) = q
    """
    n = len(p)
    d = [qi - pi for qi, pi in zip(q, p)]
    k = next(i for i, x in enumerate(d) if not x.is_zero())
    columns = [d]
    for j in range(n):
        if j != k:
            columns.append([Scalar(field, 1 if i == j else 0) for i in range(n)])
    matrix = [[columns[c][r] for c in range(n)] for r in range(n)]
    return translation(ring, n, p).compose(linear(ring, n, matrix))


def sln_extraction(
    h: Endo, p: Sequence, q: Sequence, samples: Sequence[int] = DEFAULT_SAMPLES
) -> SlnExtraction:
    """
    Produces a nontrivial elementary matrix as the limit of a family of
    conjugates of h. After normalizing p to the origin and q to e_1, the
    map f = h^-1 o beta^-1 o h o beta with beta = (x_1, x_2 + x_1 (x_1 - 1)^2,
    x_3, ...) fixes the origin with linear part D(beta)(0), and its
    Alexander family degenerates to that matrix

    The conjugate f is expanded symbolically and has degree up to
    9 deg(h) deg(h^-1), e.g. 225 for the Nagata map, so in practice h
    should have degree at most 2 or 3.

    Args:
        h: A parameter free automorphism with h(p) = q
        p: The moved point
        q: Its image
        samples: Nonzero parameter values for the direct composition checks

    Returns:
        The extraction result
    """
    if h.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    n = h.dimension()
    if n < 2:
        msg = "Elementary matrices need n >= 2"
        raise DimensionMismatch(msg)
    field = h.field()
    ring = h.ring()
    p = _point(field, p)
    q = _point(field, q)
    if len(p) != n or len(q) != n:
        msg = f"Points must have {n:d} coordinates"
        raise DimensionMismatch(msg)
    if p == q:
        msg = "The point is fixed, p = q"
        raise DegenerateGeometry(msg)
    if h.evaluate(p) != q:
        msg = "h(p) is not q"
        raise FixedPointMissing(msg)

    a = _normalization(field, ring, p, q)
    a_inv = formal_inverse(a)
    h_norm = a_inv.compose(h.compose(a))
    h_norm_inv = formal_inverse(h_norm)

    x = [MultiPoly.variable(ring, n, i) for i in range(1, n + 1)]
    bump = x[0] * (x[0] - 1) ** 2
    beta = Endo([x[0], x[1] + bump, *x[2:]])
    beta_inv = Endo([x[0], x[1] - bump, *x[2:]])

    bound = 9 * h_norm.degree() * h_norm_inv.degree()
    if bound > SLN_DEGREE_WARNING:
        log.warning(f"Origin fixing conjugate may reach degree {bound:d}")
    f = h_norm_inv.compose(beta_inv.compose(h_norm.compose(beta)))
    log.info(f"Origin fixing conjugate has degree {f.degree():d}")
    if not f.fixes_origin():
        msg = "Conjugate does not fix the origin"
        log.error(msg)
        raise InvariantViolation(msg)

    family = alexander_family(f)
    matrix, _ = family.specialize_t(0).linear_part()
    beta_matrix = beta.derivative().at([0] * n)
    if matrix != beta_matrix:
        msg = "Limit matrix differs from the derivative of the bump map"
        log.error(msg)
        raise InvariantViolation(msg)

    checks = []
    for t0 in usable_samples(field, samples):
        s = Scalar(field, field.from_int(t0))
        alpha = diagonal(ring, n, [s] * n)
        alpha_inv = diagonal(ring, n, [s.inverse()] * n)
        checks.append((t0, alpha_inv.compose(f.compose(alpha)) == family.specialize_t(t0)))
    if not all(ok for _, ok in checks):
        msg = f"Sample checks failed: {checks!s:s}"
        log.error(msg)
        raise InvariantViolation(msg)

    return SlnExtraction(a, h_norm, f, family, matrix, checks)
