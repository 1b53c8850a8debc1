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
Batteries of identity checks over a field: an exhaustive grid of small
parameters, and seeded random draws.
"""

import itertools
import logging
from typing import List

import numpy as np

from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar
from ..tame.randomword import random_scalar
from .commutators import (
    verify_char2_identity,
    verify_elementary_additivity,
    verify_gl_conjugation,
    verify_h_commutator,
    verify_translation_conjugacy,
    verify_u_commutator,
)
from .report import IdentityReport

log = logging.getLogger(__name__)

GRID_DEGREES = (1, 2, 3)
RANDOM_DEGREE = 5


def parameter_values(field: FieldDesc, height: int = 1) -> List[Scalar]:
    """
    Returns every element of a finite field, or -height..height over QQ

    Args:
        field: The field
        height: Bound of the rational grid

    Returns:
        The parameter values
    """
    if field.is_finite():
        return [Scalar(field, v) for v in field.elements()]
    return [Scalar(field, field.from_int(k)) for k in range(-height, height + 1)]


def _has_char2_identity(field: FieldDesc) -> bool:
    return field.characteristic() == 2 and field.cardinality() > 2


def _has_gl_parameter(field: FieldDesc) -> bool:
    return not field.is_finite() or field.cardinality() > 2


def grid_suite(field: FieldDesc, height: int = 1) -> List[IdentityReport]:
    """
    Checks every commutator and conjugation identity on a grid of
    parameters: monomial tails c x_2^k and c x_2 x_3, c x_2 x_3^2 with c and
    the shifts ranging over parameter_values()

    Args:
        field: The field
        height: Bound of the rational grid

    Returns:
        The reports, in a fixed order
    """
    ring = ParamRing(field)
    values = parameter_values(field, height)
    nonzero = [v for v in values if not v.is_zero()]
    x2 = MultiPoly.variable(ring, 2, 2)
    y2 = MultiPoly.variable(ring, 3, 2)
    y3 = MultiPoly.variable(ring, 3, 3)
    reports = []

    for k in GRID_DEGREES:
        monomial = x2**k
        for c in nonzero:
            q = monomial.scalar_mul(c)
            reports.extend(verify_h_commutator(q, [e]) for e in values)
            reports.extend(verify_elementary_additivity(q, x2.scalar_mul(d)) for d in nonzero)
        reports.extend(verify_u_commutator(monomial, [a]) for a in nonzero)

    for e2, e3 in itertools.product(values, repeat=2):
        reports.append(verify_h_commutator(y2 * y3, [e2, e3]))
    for a2, a3 in itertools.product(nonzero, repeat=2):
        reports.append(verify_u_commutator(y2 * y3**2, [a2, a3]))

    if _has_char2_identity(field):
        for theta, mu, nu in itertools.product(nonzero, repeat=3):
            reports.append(verify_char2_identity(theta, mu, nu, field))

    if _has_gl_parameter(field):
        for a in nonzero:
            if a == 1:
                continue
            reports.extend(verify_gl_conjugation(x2**k, a) for k in GRID_DEGREES)

    target = [Scalar(field, field.zero()), Scalar(field, field.one())]
    for v in itertools.product(values, repeat=2):
        if all(x.is_zero() for x in v):
            continue
        reports.append(verify_translation_conjugacy(list(v), target, field))

    failed = sum(1 for r in reports if not r.verdict())
    log.info(f"Identity grid over {field.tag():s}: {len(reports):d} checks, {failed:d} failed")
    return reports


def _random_tail(field: FieldDesc, n: int, degree: int, rng: np.random.Generator) -> MultiPoly:
    """
    Draws a polynomial in x_2..x_n with up to three terms of degree at most
    degree
    """
    ring = ParamRing(field)
    p = MultiPoly.zero(ring, n)
    for _ in range(int(rng.integers(1, 4))):
        e = [0] * (n + 1)
        for _ in range(int(rng.integers(0, degree + 1))):
            e[int(rng.integers(2, n + 1))] += 1
        p = p + MultiPoly.monomial(ring, n, tuple(e), random_scalar(field, rng))
    return p


def _random_scalars(field: FieldDesc, count: int, rng, nonzero: bool = False) -> List[Scalar]:
    return [Scalar(field, random_scalar(field, rng, nonzero)) for _ in range(count)]


def _random_gl_parameter(field: FieldDesc, rng) -> Scalar:
    while True:
        (a,) = _random_scalars(field, 1, rng, nonzero=True)
        if a != 1:
            return a


def random_suite(
    field: FieldDesc, count: int, rng: np.random.Generator, degree: int = RANDOM_DEGREE
) -> List[IdentityReport]:
    """
    Checks the identities on random parameters, n in {2, 3}

    Args:
        field: The field
        count: Number of random draws, each checking every applicable identity
        rng: The random generator, i.e. numpy.random.default_rng(seed)
        degree: Degree bound of the random tails

    Returns:
        The reports, in draw order
    """
    reports = []
    for _ in range(count):
        n = int(rng.integers(2, 4))
        q = _random_tail(field, n, degree, rng)
        reports.append(verify_h_commutator(q, _random_scalars(field, n - 1, rng)))
        reports.append(verify_u_commutator(q, _random_scalars(field, n - 1, rng, nonzero=True)))
        reports.append(verify_elementary_additivity(q, _random_tail(field, n, degree, rng)))
        if _has_gl_parameter(field):
            reports.append(verify_gl_conjugation(q, _random_gl_parameter(field, rng)))
        if _has_char2_identity(field):
            theta, mu, nu = _random_scalars(field, 3, rng, nonzero=True)
            reports.append(verify_char2_identity(theta, mu, nu, field))
        v = _random_scalars(field, n, rng)
        w = _random_scalars(field, n, rng)
        v[0] = Scalar(field, random_scalar(field, rng, nonzero=True))
        w[-1] = Scalar(field, random_scalar(field, rng, nonzero=True))
        reports.append(verify_translation_conjugacy(v, w, field))
    log.info(f"Random identity suite over {field.tag():s}: {len(reports):d} checks")
    return reports
