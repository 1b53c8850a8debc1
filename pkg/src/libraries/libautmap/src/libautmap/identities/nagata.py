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
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar
from ..tame.generators import diagonal
from .report import IdentityReport, as_scalars, infer_field, require_nonzero

log = logging.getLogger(__name__)


def nagata_invariant(ring: ParamRing) -> MultiPoly:
    """
    Returns Delta = x_1 x_3 + x_2^2 in three variables
    """
    x1, x2, x3 = (MultiPoly.variable(ring, 3, i) for i in (1, 2, 3))
    return x1 * x3 + x2 * x2


def nagata_map(ring: ParamRing, alpha: Scalar) -> Endo:
    """
    Returns N_alpha = (x_1 - 2 alpha x_2 Delta - alpha^2 x_3 Delta^2,
    x_2 + alpha x_3 Delta, x_3). N_1 is the Nagata automorphism

    Args:
        ring: The coefficient ring
        alpha: The parameter

    Returns:
        The map
    """
    x1, x2, x3 = (MultiPoly.variable(ring, 3, i) for i in (1, 2, 3))
    delta = nagata_invariant(ring)
    return Endo(
        [
            x1 - (x2 * delta).scalar_mul(alpha * 2) - (x3 * delta * delta).scalar_mul(alpha * alpha),
            x2 + (x3 * delta).scalar_mul(alpha),
            x3,
        ]
    )


def scaling_map(ring: ParamRing, u: Scalar) -> Endo:
    """
    Returns L_u = (u x_1, x_2, u^-1 x_3), which preserves Delta
    """
    return diagonal(ring, 3, [u, 1, u.inverse()])


def nagata_suite(alpha, beta, u, field: Optional[FieldDesc] = None) -> List[IdentityReport]:
    """
    Checks the identities of the Nagata family by exact composition in
    dimension three: Delta is invariant, N_alpha o N_beta = N_{alpha+beta},
    Jac(N_alpha) = 1, L_u^-1 o N_alpha o L_u = N_{alpha/u} and
    N_alpha o L_u o N_{alpha(u-1)/u} = L_u o N_alpha, the conjugation of L_u

    Args:
        alpha: A scalar
        beta: A scalar
        u: A nonzero scalar
        field: The field, inferred from the scalars if omitted

    Returns:
        The five reports
    """
    field = infer_field([alpha, beta, u], field)
    alpha, beta, u = as_scalars(field, [alpha, beta, u])
    require_nonzero([u], "u")

    ring = ParamRing(field)
    delta = nagata_invariant(ring)
    n_alpha = nagata_map(ring, alpha)
    l_u = scaling_map(ring, u)
    l_u_inv = scaling_map(ring, u.inverse())
    params = {"alpha": alpha, "beta": beta, "u": u}

    reports = [
        IdentityReport(
            "nagata_invariant",
            params,
            delta.substitute(list(n_alpha.components())),
            delta,
        ),
        IdentityReport(
            "nagata_additive",
            params,
            n_alpha.compose(nagata_map(ring, beta)),
            nagata_map(ring, alpha + beta),
        ),
        IdentityReport("nagata_jacobian", params, n_alpha.jacobian(), MultiPoly.one(ring, 3)),
        IdentityReport(
            "nagata_scaling",
            params,
            l_u_inv.compose(n_alpha.compose(l_u)),
            nagata_map(ring, alpha / u),
        ),
        IdentityReport(
            "nagata_conjugate_to_linear",
            params,
            n_alpha.compose(l_u.compose(nagata_map(ring, alpha * (u - 1) / u))),
            l_u.compose(n_alpha),
        ),
    ]
    log.info(f"Nagata suite: {sum(1 for r in reports if r.verdict()):d} of {len(reports):d} hold")
    return reports
