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
Explicit commutators of elementary maps with translations and with
determinant one diagonal maps, and the conjugation identities used to
generate elementary maps inside normal subgroups of the automorphism group.
Every identity is checked by exact composition against its closed form.
"""

import logging
from typing import List, Optional, Sequence

from ..endo.endo import Endo
from ..endo.matrix import mat_det, mat_inv, mat_mul
from ..errors import (
    DimensionMismatch,
    FieldTooSmall,
    InputError,
    WrongCharacteristic,
    ZeroScalar,
)
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar
from ..tame.generators import diagonal, elementary, linear, translation
from .report import IdentityReport, as_scalars, infer_field, require_nonzero

log = logging.getLogger(__name__)


def _check_tail(q: MultiPoly, values: Sequence, label: str) -> int:
    n = q.nvars()
    if n < 2:
        msg = "Elementary maps need n >= 2"
        raise DimensionMismatch(msg)
    if len(values) != n - 1:
        msg = f"Expected {n - 1:d} values for {label:s}, got {len(values):d}"
        raise DimensionMismatch(msg)
    return n


def _h_commutator(q: MultiPoly, eps: List[Scalar]) -> Endo:
    ring = q.ring()
    n = q.nvars()
    e_q = elementary(ring, n, 1, q)
    e_q_inv = elementary(ring, n, 1, -q)
    tau = translation(ring, n, [0, *eps])
    tau_inv = translation(ring, n, [0, *(-e for e in eps)])
    return e_q_inv.compose(tau_inv.compose(e_q.compose(tau)))


def verify_h_commutator(q: MultiPoly, eps: Sequence) -> IdentityReport:
    """
    Checks (e_q^-1 o tau^-1 o e_q) o tau = (x_1 + q(x' + eps) - q(x'), x')
    with tau the translation by (0, eps_2, ..., eps_n)

    Args:
        q: A polynomial in x_2..x_n
        eps: The shifts eps_2..eps_n

    Returns:
        The report
    """
    n = _check_tail(q, eps, "eps")
    eps = as_scalars(q.field(), eps)
    lhs = _h_commutator(q, eps)

    ring = q.ring()
    shifted = q.substitute(list(translation(ring, n, [0, *eps]).components()))
    rhs = elementary(ring, n, 1, shifted - q)
    return IdentityReport("h_commutator", {"q": q, "eps": eps}, lhs, rhs)


def verify_char2_identity(
    theta, mu, nu, field: Optional[FieldDesc] = None
) -> IdentityReport:
    """
    In characteristic two, the h commutators for (theta nu x_2^3, mu) and
    (mu nu x_2^3, theta) composed with the translation by
    theta mu nu (theta^2 + mu^2) give the linear elementary map
    (x_1 + theta mu nu (theta + mu) x_2, x_2)

    Args:
        theta: A scalar
        mu: A scalar
        nu: A scalar
        field: The field, inferred from the scalars if omitted

    Returns:
        The report
    """
    field = infer_field([theta, mu, nu], field)
    if field.characteristic() != 2:
        msg = f"Expected characteristic 2, got {field.tag():s}"
        raise WrongCharacteristic(msg)
    if field.cardinality() < 3:
        msg = "The identity needs a field with at least 3 elements"
        raise FieldTooSmall(msg)

    theta, mu, nu = as_scalars(field, [theta, mu, nu])
    ring = ParamRing(field)
    x2 = MultiPoly.variable(ring, 2, 2)
    cube = x2**3
    first = _h_commutator(cube.scalar_mul(theta * nu), [mu])
    second = _h_commutator(cube.scalar_mul(mu * nu), [theta])
    shift = theta * mu * nu * (theta * theta + mu * mu)
    lhs = first.compose(second.compose(translation(ring, 2, [shift, 0])))
    rhs = elementary(ring, 2, 1, x2.scalar_mul(theta * mu * nu * (theta + mu)))
    return IdentityReport(
        "char2_identity", {"theta": theta, "mu": mu, "nu": nu}, lhs, rhs
    )


def verify_u_commutator(q: MultiPoly, alpha: Sequence) -> IdentityReport:
    """
    Checks (e_q^-1 o delta^-1 o e_q) o delta = (x_1 + c q(alpha x') - q(x'), x')
    with c = alpha_2 ... alpha_n and delta = (c^-1 x_1, alpha_2 x_2, ...)

    Args:
        q: A polynomial in x_2..x_n
        alpha: Nonzero scalars alpha_2..alpha_n

    Returns:
        The report
    """
    n = _check_tail(q, alpha, "alpha")
    alpha = as_scalars(q.field(), alpha)
    require_nonzero(alpha, "alpha")

    ring = q.ring()
    c = Scalar(q.field(), 1)
    for a in alpha:
        c = c * a
    delta = diagonal(ring, n, [c.inverse(), *alpha])
    delta_inv = diagonal(ring, n, [c, *(a.inverse() for a in alpha)])
    e_q = elementary(ring, n, 1, q)
    e_q_inv = elementary(ring, n, 1, -q)
    lhs = e_q_inv.compose(delta_inv.compose(e_q.compose(delta)))

    scaled = q.substitute(list(diagonal(ring, n, [1, *alpha]).components()))
    rhs = elementary(ring, n, 1, scaled.scalar_mul(c) - q)
    return IdentityReport("u_commutator", {"q": q, "alpha": alpha}, lhs, rhs)


def verify_gl_conjugation(s: MultiPoly, a) -> IdentityReport:
    """
    Checks (L o e_{bs}^-1 o L^-1) o e_{bs} = e_s for L = (a x_1, x_2, ...)
    and b = 1 / (1 - a), so every elementary map is a commutator with a
    diagonal matrix as soon as the field has an element a outside {0, 1}

    Args:
        s: A polynomial in x_2..x_n
        a: A scalar, neither 0 nor 1

    Returns:
        The report
    """
    field = s.field()
    n = s.nvars()
    (a,) = as_scalars(field, [a])
    require_nonzero([a], "a")
    if a == 1:
        msg = "Parameter a must differ from 1"
        raise InputError(msg)

    ring = s.ring()
    b = (1 - a).inverse()
    bs = s.scalar_mul(b)
    ones = [1] * (n - 1)
    scaling = diagonal(ring, n, [a, *ones])
    scaling_inv = diagonal(ring, n, [a.inverse(), *ones])
    e_bs = elementary(ring, n, 1, bs)
    e_bs_inv = elementary(ring, n, 1, -bs)
    lhs = scaling.compose(e_bs_inv.compose(scaling_inv.compose(e_bs)))
    rhs = elementary(ring, n, 1, s)
    return IdentityReport("gl_conjugation", {"s": s, "a": a}, lhs, rhs)


def _basis_with_first(field: FieldDesc, v: List[Scalar]) -> list:
    """
    Raw invertible matrix whose first column is v, completed by standard
    basis vectors
    """
    n = len(v)
    k = next(i for i, x in enumerate(v) if not x.is_zero())
    columns = [[x.value() for x in v]]
    for j in range(n):
        if j != k:
            columns.append([field.one() if i == j else field.zero() for i in range(n)])
    return [[columns[c][r] for c in range(n)] for r in range(n)]


def special_linear_transport(field: FieldDesc, v: List[Scalar], w: List[Scalar]) -> list:
    """
    Returns a determinant one matrix M, as raw values, with M v = w

    Args:
        field: The field
        v: A nonzero vector, n >= 2
        w: A nonzero vector

    Returns:
        The matrix
    """
    b_v = _basis_with_first(field, v)
    b_w = _basis_with_first(field, w)
    factor = field.div(mat_det(field, b_v), mat_det(field, b_w))
    for row in b_w:
        row[1] = field.mul(row[1], factor)
    return mat_mul(field, b_w, mat_inv(field, b_v))


def verify_translation_conjugacy(
    v: Sequence, w: Sequence, field: Optional[FieldDesc] = None
) -> IdentityReport:
    """
    Builds M in SL_n with M v = w and checks M o tau_v o M^-1 = tau_w

    Args:
        v: A nonzero vector
        w: A nonzero vector of the same length, at least 2
        field: The field, inferred from the entries if omitted

    Returns:
        The report
    """
    field = infer_field([*v, *w], field)
    n = len(v)
    if n < 2 or len(w) != n:
        msg = "Expected two vectors of the same length n >= 2"
        raise DimensionMismatch(msg)
    v = as_scalars(field, v)
    w = as_scalars(field, w)
    for label, vec in (("v", v), ("w", w)):
        if all(x.is_zero() for x in vec):
            msg = f"Vector {label:s} must be nonzero"
            raise ZeroScalar(msg)

    matrix = special_linear_transport(field, v, w)
    inverse = mat_inv(field, matrix)
    ring = ParamRing(field)

    def to_scalars(raw):
        return [[Scalar(field, x) for x in row] for row in raw]

    m = linear(ring, n, to_scalars(matrix))
    m_inv = linear(ring, n, to_scalars(inverse))
    lhs = m.compose(translation(ring, n, v).compose(m_inv))
    rhs = translation(ring, n, w)
    log.debug(f"Transport matrix {to_scalars(matrix)!s:s}")
    return IdentityReport(
        "translation_conjugacy",
        {"v": v, "w": w, "matrix": [[str(x) for x in row] for row in to_scalars(matrix)]},
        lhs,
        rhs,
    )


def verify_elementary_additivity(s: MultiPoly, s2: MultiPoly) -> IdentityReport:
    """
    Checks e_s o e_{s'} = e_{s+s'}

    Args:
        s: A polynomial in x_2..x_n
        s2: Another one over the same ring

    Returns:
        The report
    """
    ring = s.ring()
    n = s.nvars()
    lhs = elementary(ring, n, 1, s).compose(elementary(ring, n, 1, s2))
    rhs = elementary(ring, n, 1, s + s2)
    return IdentityReport("elementary_additivity", {"s": s, "s_prime": s2}, lhs, rhs)
