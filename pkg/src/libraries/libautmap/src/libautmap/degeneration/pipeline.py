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
from typing import Optional, Sequence, Union

from ..endo.endo import Endo
from ..errors import (
    FieldNotInfinite,
    InvariantViolation,
    IsTranslation,
    JacobianNotOne,
    RingMismatch,
)
from ..poly.multipoly import MultiPoly
from ..ring.paramring import RingKind
from ..ring.scalar import Scalar
from ..tame.factor import TameWord
from ..tame.generators import translation
from ..tame.inverse import formal_inverse
from ..tame.jvdk import jvdk_decompose
from .certificate import DegenerationCertificate
from .degenerate import (
    DEFAULT_SAMPLES,
    degenerate,
    find_witness,
    translation_point,
    usable_samples,
)

log = logging.getLogger(__name__)


def find_noncommuting_translation(f: Endo) -> Optional[Endo]:
    """
    Returns a coordinate translation x_i -> x_i + c, c in 1..deg(f)+1, that
    does not commute with f, or None when f is a translation. The
    difference f o tau_c - tau_c o f is polynomial in c of degree at most
    deg(f), so it cannot vanish at deg(f) + 1 values unless it vanishes
    identically

    Args:
        f: A parameter free map over QQ

    Returns:
        The translation, or None
    """
    if f.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    if f.field().is_finite():
        msg = f"Translation search needs an infinite field, got {f.field().tag():s}"
        raise FieldNotInfinite(msg)
    if f.is_translation():
        return None

    n = f.dimension()
    ring = f.ring()
    for i in range(n):
        for c in range(1, max(f.degree(), 1) + 2):
            vector = [0] * n
            vector[i] = c
            tau = translation(ring, n, vector)
            if f.compose(tau) != tau.compose(f):
                log.debug(f"Translation {tau!s:s} does not commute with the input")
                return tau

    msg = "Every coordinate translation commutes with a non translation"
    log.error(msg)
    raise InvariantViolation(msg)


def commutator_pipeline(
    f: Endo, samples: Sequence[int] = DEFAULT_SAMPLES, height: Optional[int] = None
) -> DegenerationCertificate:
    """
    Builds the family g = tau^-1 o f^-1 o tau o f with tau = (x + t nu) for
    a translation nu not commuting with f, then degenerates g to a
    nontrivial translation

    Args:
        f: A parameter free map over QQ with Jacobian 1, not a translation
        samples: Nonzero parameter values for the direct composition checks
        height: Witness grid height, the degree bound of the limit
            polynomials if omitted

    Returns:
        The certificate; its limit is a nontrivial translation
    """
    if f.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    jac = f.jacobian_unit()
    if jac is None or jac != 1:
        msg = f"Jacobian {f.jacobian()!s:s} is not 1"
        raise JacobianNotOne(msg)

    tau0 = find_noncommuting_translation(f)
    if tau0 is None:
        msg = "The input is a translation"
        raise IsTranslation(msg)

    n = f.dimension()
    field = f.field()
    nu = [Scalar(field, p.constant_term()) for p in tau0.translation_part()]
    if n == 2:
        inverse = jvdk_decompose(f)
    else:
        inverse = formal_inverse(f)

    ring = f.ring().with_kind(RingKind.POLY_T)
    t = MultiPoly.parameter(ring, n)
    tau = translation(ring, n, [t.scalar_mul(v) for v in nu])
    tau_inv = translation(ring, n, [-t.scalar_mul(v) for v in nu])
    g = tau_inv.compose(_conjugate_by(f, inverse, tau))
    log.info(f"Commutator family: {g!s:s}")

    eps = find_witness(g, height)
    cert = degenerate(g, eps, samples)
    a, b = cert.slope()

    checks = []
    base = f.ring()
    s = translation_point(g) if a == 0 else None
    for t0 in usable_samples(f.field(), samples):
        tau_at = s if a == 0 else t0**a
        checks.append(
            (t0, _conjugated_commutator_check(f, inverse, nu, eps, tau_at, b, cert.conjugate(), t0, base))
        )
    if not all(ok for _, ok in checks):
        msg = f"Commutator sample checks failed: {checks!s:s}"
        log.error(msg)
        raise InvariantViolation(msg)

    if not cert.nontrivial():
        msg = "Witness search produced a trivial limit"
        log.error(msg)
        raise InvariantViolation(msg)

    return DegenerationCertificate(
        g, (a, b), eps, cert.conjugate(), cert.limit(), checks, source=f, direction=tau
    )


def _conjugated_commutator_check(f, inverse, nu, eps, tau_at, b, h, t0, base) -> bool:
    """
    Compares h(t0) with rho(t0)^-1 o tau(s)^-1 o f^-1 o tau(s) o f o rho(t0),
    where s = t0^a, or the translation point of a family of translations
    """
    n = f.dimension()
    field = f.field()
    ta = Scalar(field, field.from_int(tau_at))
    scale = Scalar(field, field.pow(field.from_int(t0), -b))
    tau = translation(base, n, [v * ta for v in nu])
    tau_inv = translation(base, n, [-(v * ta) for v in nu])
    rho = translation(base, n, [e * scale for e in eps])
    rho_inv = translation(base, n, [-(e * scale) for e in eps])
    direct = rho_inv.compose(tau_inv.compose(_conjugate_by(f, inverse, tau).compose(rho)))
    return direct == h.specialize_t(t0)


def _conjugate_by(f: Endo, inverse: Union[Endo, TameWord], x: Endo) -> Endo:
    """
    Returns f^-1 o x o f over the ring of x. Given the factorization of f
    instead of its inverse, the inverse factors are peeled off x o f one
    at a time and f^-1 is never substituted whole

    Args:
        f: A parameter free map
        inverse: The inverse of f, or a word whose product is f
        x: The map to conjugate

    Returns:
        The conjugate
    """
    ring = x.ring()
    out = x.compose(f.with_ring(ring))
    if isinstance(inverse, Endo):
        return inverse.with_ring(ring).compose(out)
    for factor in inverse:
        out = factor.inverse().endo().with_ring(ring).compose(out)
    return out
