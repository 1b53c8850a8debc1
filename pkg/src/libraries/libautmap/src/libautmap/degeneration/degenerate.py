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
Degeneration of a family g over k[t] with g(0) = id to a translation.

With (a, b) the slope of g and rho = (x_i + t^-b eps_i), the family
h = rho^-1 o g(t^a) o rho has no negative powers of t and its value at
t = 0 is the translation x_i + P_i(eps), where P_i collects the bigraded
parts q_{i,j,m} of g_i - x_i with a j = b m.
"""

import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..endo.endo import Endo
from ..errors import (
    DimensionMismatch,
    FieldNotInfinite,
    IdentityInput,
    InputError,
    InvariantViolation,
    NoWitness,
    NotIdAtZero,
    RingMismatch,
)
from ..poly.multipoly import MultiPoly
from ..ring.paramring import ParamRing, RingKind
from ..ring.scalar import Scalar
from ..tame.generators import translation
from .certificate import DegenerationCertificate

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = (1, 2)


def _check_family(g: Endo) -> None:
    if g.ring().kind() != RingKind.POLY_T:
        msg = f"Expected a family over k[t], got {g.ring().tag():s}"
        raise RingMismatch(msg)
    if g.is_identity():
        msg = "The family is the identity"
        raise IdentityInput(msg)
    if not g.specialize_t(0).is_identity():
        msg = "The family is not the identity at t = 0"
        raise NotIdAtZero(msg)


def _displacements(g: Endo) -> List[MultiPoly]:
    n = g.dimension()
    return [
        c - MultiPoly.variable(g.ring(), n, i)
        for i, c in enumerate(g.components(), start=1)
    ]


def slope(g: Endo) -> Tuple[int, int]:
    """
    Returns the coprime pair (a, b) with a/b the largest ratio m/j over the
    nonzero bigraded parts q_{i,j,m} t^j of g_i - x_i. A family of
    translations (every m = 0) gives the marker (0, 1)

    Args:
        g: A family over k[t] with g(0) = id and g != id

    Returns:
        The slope (a, b)
    """
    _check_family(g)
    best = Fraction(0)
    for d in _displacements(g):
        for j, m in d.bigraded_parts():
            best = max(best, Fraction(m, j))
    return best.numerator, best.denominator


def translation_point(g: Endo) -> int:
    """
    The first s = 1, 2, ... with g(s) != id, for a family of translations
    """
    s = 1
    while g.specialize_t(s).is_identity():
        s += 1
    return s


def limit_polynomials(g: Endo) -> List[MultiPoly]:
    """
    Returns P_1..P_n, the polynomials whose values at eps give the limit
    translation x_i + P_i(eps). For a family of translations these are
    the constants of g(s) - x for the first s with g(s) != id

    Args:
        g: A family over k[t] with g(0) = id and g != id

    Returns:
        The parameter free polynomials P_i
    """
    a, b = slope(g)
    n = g.dimension()
    base = g.ring().with_kind(RingKind.NO_PARAM)
    if a == 0:
        g_s = g.specialize_t(translation_point(g))
        return [
            c - MultiPoly.variable(base, n, i)
            for i, c in enumerate(g_s.components(), start=1)
        ]

    out = []
    for d in _displacements(g):
        p = MultiPoly.zero(base, n)
        for (j, m), q in d.bigraded_parts().items():
            if a * j == b * m:
                p = p + q
        out.append(p)
    return out


def _shift(ring: ParamRing, n: int, eps: Sequence[Scalar], power: int, sign: int) -> Endo:
    t_power = MultiPoly.parameter(ring, n, power)
    return translation(ring, n, [t_power.scalar_mul(e) * sign for e in eps])


def usable_samples(field, samples: Sequence[int]) -> List[int]:
    """
    Drops the sample values that vanish in the field, e.g. t0 = 2 over GF(2)
    """
    kept = [t0 for t0 in samples if not field.is_zero(field.from_int(t0))]
    if len(kept) != len(samples):
        log.warning(f"Skipping samples that vanish in {field.tag():s}")
    return kept


def _sample_check(g: Endo, h: Endo, g_at: int, b: int, eps: Sequence[Scalar], t0: int) -> bool:
    """
    Compares h(t0) with rho(t0)^-1 o g(g_at) o rho(t0) computed over the
    base field, where g_at = t0^a (or the translation point when a = 0)
    """
    field = g.field()
    base = g.ring().with_kind(RingKind.NO_PARAM)
    n = g.dimension()
    t0_inv_b = Scalar(field, field.pow(field.from_int(t0), -b))
    rho = translation(base, n, [e * t0_inv_b for e in eps])
    rho_inv = translation(base, n, [-(e * t0_inv_b) for e in eps])
    direct = rho_inv.compose(g.specialize_t(g_at).compose(rho))
    return direct == h.specialize_t(t0)


def _run_sample_checks(g, h, g_at, b, eps, samples) -> List[Tuple[int, bool]]:
    checks = [
        (t0, _sample_check(g, h, g_at(t0), b, eps, t0)) for t0 in usable_samples(g.field(), samples)
    ]
    if not all(ok for _, ok in checks):
        msg = f"Sample checks failed: {checks!s:s}"
        log.error(msg)
        raise InvariantViolation(msg)
    return checks


def _check_eps(g: Endo, eps: Sequence[Scalar]) -> List[Scalar]:
    field = g.field()
    if len(eps) != g.dimension():
        msg = f"Shift vector has {len(eps):d} entries, expected {g.dimension():d}"
        raise DimensionMismatch(msg)
    out = []
    for e in eps:
        if isinstance(e, int):
            e = Scalar(field, field.from_int(e))
        elif e.field() != field:
            msg = f"Shift vector entries must lie in {field.tag():s}"
            raise RingMismatch(msg)
        out.append(e)
    return out


def degenerate(
    g: Endo, eps: Sequence[Scalar], samples: Sequence[int] = DEFAULT_SAMPLES
) -> DegenerationCertificate:
    """
    Conjugates g(t^a) by rho = (x_i + t^-b eps_i) and specializes at t = 0

    Args:
        g: A family over k[t] with g(0) = id and g != id
        eps: The shift vector
        samples: Nonzero parameter values for the direct composition checks

    Returns:
        The certificate with the family h and its translation limit
    """
    a, b = slope(g)
    eps = _check_eps(g, eps)
    n = g.dimension()
    ring = g.ring()

    if a == 0:
        s = translation_point(g)
        limit = g.specialize_t(s)
        h = limit.with_ring(ring)
        log.info(f"Family of translations, using its value at t = {s:d}")
        checks = _run_sample_checks(g, h, lambda t0: s, b, eps, samples)
        return DegenerationCertificate(g, (a, b), eps, h, limit, checks)

    laurent = ring.with_kind(RingKind.LAURENT_T)
    g_laurent = g.with_ring(laurent).substitute_t(MultiPoly.parameter(laurent, n, a))
    rho = _shift(laurent, n, eps, -b, 1)
    rho_inv = _shift(laurent, n, eps, -b, -1)
    h_laurent = rho_inv.compose(g_laurent.compose(rho))

    for c in h_laurent.components():
        low, _ = c.t_range()
        if low < 0:
            msg = f"Conjugated family has a term with t^{low:d}"
            log.error(msg)
            raise InvariantViolation(msg)

    h = h_laurent.with_ring(ring)
    limit = h.specialize_t(0)
    if not limit.is_translation():
        msg = f"Limit {limit!s:s} is not a translation"
        log.error(msg)
        raise InvariantViolation(msg)

    checks = _run_sample_checks(g, h, lambda t0: t0**a, b, eps, samples)
    log.info(f"Degenerated with slope ({a:d}, {b:d}) to {limit!s:s}")
    return DegenerationCertificate(g, (a, b), eps, h, limit, checks)


def find_witness(g: Endo, height: Optional[int] = None) -> List[Scalar]:
    """
    Searches the grid {0, ..., D}^n in lexicographic order for a shift
    vector with a nontrivial limit, D being the largest degree of the
    limit polynomials. A nonzero polynomial of degree D cannot vanish on
    the whole grid, so the search always succeeds

    Args:
        g: A family over QQ[t] with g(0) = id and g != id
        height: Grid height used instead of D

    Returns:
        The first shift vector whose limit is not the identity
    """
    field = g.field()
    if field.is_finite():
        msg = f"Witness search needs an infinite field, got {field.tag():s}"
        raise FieldNotInfinite(msg)

    n = g.dimension()
    a, _ = slope(g)
    if a == 0:
        return [Scalar(field, 0)] * n

    polys = [p for p in limit_polynomials(g) if not p.is_zero()]
    if not polys:
        msg = "Every limit polynomial vanishes"
        log.error(msg)
        raise NoWitness(msg)

    needed = max(p.x_degree() for p in polys)
    bound = needed if height is None else height
    for point in itertools.product(range(bound + 1), repeat=n):
        if any(not p.evaluate(point).is_zero() for p in polys):
            log.debug(f"Witness {point!s:s} found on the grid of height {bound:d}")
            return [Scalar(field, v) for v in point]

    if bound < needed:
        msg = f"No witness on the grid of height {bound:d}, height {needed:d} always has one"
        raise InputError(msg)
    msg = f"No witness on the grid of height {bound:d}"
    log.error(msg)
    raise NoWitness(msg)
