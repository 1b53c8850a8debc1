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
Parity census of the tame automorphisms of Jacobian one acting on the
points of GF(q)^n. The sign is a homomorphism and e_s o e_s' = e_{s+s'},
so parity is decided on additive generating sets: GF(p)-basis multiples
of coordinate vectors, of monomials of degree at most three in x_2..x_n,
and of the off diagonal matrix units.
"""

import itertools
import logging
from typing import List, Optional, Tuple

import numpy as np

from ..endo.endo import Endo
from ..errors import InputError
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, parse_field
from ..ring.paramring import ParamRing
from ..ring.scalar import Scalar
from ..settings import census_max_points, translation_enumeration_limit
from ..tame.generators import elementary, linear, translation
from .action import PointGrid, PermRep

log = logging.getLogger(__name__)

CENSUS_MONOMIAL_DEGREE = 3


def _as_field(q) -> FieldDesc:
    if isinstance(q, FieldDesc):
        return q
    return parse_field(f"GF({int(q):d})")


def _sign(grid: PointGrid, f: Endo) -> int:
    rep = PermRep(grid, f, grid.image_table(f))
    if not rep.bijective():
        msg = f"{f!s:s} is not bijective on the points"
        raise InputError(msg)
    return rep.sign()


def _basis_scalars(field: FieldDesc) -> List[Scalar]:
    return [Scalar(field, b) for b in field.prime_basis()]


def _translations(field: FieldDesc, n: int, exhaustive: bool) -> List[Endo]:
    ring = ParamRing(field)
    if exhaustive:
        elements = [Scalar(field, v) for v in field.elements()]
        return [
            translation(ring, n, list(v))
            for v in itertools.product(elements, repeat=n)
            if any(not x.is_zero() for x in v)
        ]
    out = []
    for i in range(n):
        for b in _basis_scalars(field):
            vector = [Scalar(field, field.zero())] * n
            vector[i] = b
            out.append(translation(ring, n, vector))
    return out


def _tail_monomials(ring: ParamRing, n: int, degree: int) -> List[MultiPoly]:
    out = []
    for total in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(2, n + 1), total):
            e = [0] * (n + 1)
            for i in combo:
                e[i] += 1
            out.append(MultiPoly.monomial(ring, n, tuple(e), ring.field().one()))
    return out


def _elementary_generators(field: FieldDesc, n: int) -> List[Endo]:
    ring = ParamRing(field)
    return [
        elementary(ring, n, 1, m.scalar_mul(b))
        for m in _tail_monomials(ring, n, CENSUS_MONOMIAL_DEGREE)
        for b in _basis_scalars(field)
    ]


def _matrix_units(field: FieldDesc, n: int) -> List[Endo]:
    ring = ParamRing(field)
    out = []
    for i, j in itertools.permutations(range(n), 2):
        for b in _basis_scalars(field):
            matrix = [
                [Scalar(field, field.one() if r == c else field.zero()) for c in range(n)]
                for r in range(n)
            ]
            matrix[i][j] = b
            out.append(linear(ring, n, matrix))
    return out


def parity_witness(field: FieldDesc, n: int) -> Endo:
    """
    Returns (x_1 + x_2 x_3 ... x_n, x_2, ..., x_n), and x_1 + 1 for n = 1.
    Over GF(2) it swaps exactly the two points (0, 1, ..., 1) and
    (1, 1, ..., 1)
    """
    ring = ParamRing(field)
    product = MultiPoly.one(ring, n)
    for i in range(2, n + 1):
        product = product * MultiPoly.variable(ring, n, i)
    return elementary(ring, n, 1, product)


def _all_even(grid: PointGrid, maps: List[Endo]) -> Tuple[bool, Optional[Endo]]:
    for f in maps:
        if _sign(grid, f) != 1:
            return False, f
    return True, None


def even_action_census(q, n: int, cap: Optional[int] = None) -> dict:
    """
    Decides whether every translation and every tame automorphism of
    Jacobian one acts evenly on GF(q)^n, and compares with the expected
    answers: translations are even unless (q, n) = (2, 1), and the whole
    group is even exactly when q > 2

    Args:
        q: The field order, or the field
        n: The dimension
        cap: Largest allowed number of points, census_max_points() if omitted

    Returns:
        The census report
    """
    field = _as_field(q)
    grid = PointGrid(field, n, census_max_points() if cap is None else cap)
    order = field.cardinality()

    exhaustive = grid.size() <= translation_enumeration_limit()
    translations = _translations(field, n, exhaustive)
    translations_even, odd_translation = _all_even(grid, translations)

    generators = _elementary_generators(field, n)
    units = _matrix_units(field, n)
    elementary_even, odd_elementary = _all_even(grid, generators)
    matrices_even, odd_matrix = _all_even(grid, units)

    witness = parity_witness(field, n)
    witness_sign = _sign(grid, witness)
    group_even = elementary_even and matrices_even and witness_sign == 1

    expected_translations = (order, n) != (2, 1)
    expected_group = order > 2
    consistent = translations_even == expected_translations and group_even == expected_group
    if not consistent:
        log.error(f"Parity census for GF({order:d})^{n:d} contradicts the expected dichotomy")
    else:
        log.info(f"Parity census for GF({order:d})^{n:d} complete")

    first_odd = next((f for f in (odd_elementary, odd_matrix) if f is not None), None)
    return {
        "field": field.tag(),
        "dimension": n,
        "points": grid.size(),
        "translations_checked": len(translations),
        "translations_exhaustive": exhaustive,
        "translations_even": translations_even,
        "odd_translation": None if odd_translation is None else str(odd_translation),
        "elementary_generators_checked": len(generators),
        "elementary_even": elementary_even,
        "matrix_units_checked": len(units),
        "matrices_even": matrices_even,
        "odd_generator": None if first_odd is None else str(first_odd),
        "witness": str(witness),
        "witness_sign": witness_sign,
        "group_even": group_even,
        "expected_translations_even": expected_translations,
        "expected_group_even": expected_group,
        "consistent": consistent,
    }


def centraliser_counterexample(q, cap: Optional[int] = None) -> dict:
    """
    Builds f = (x_1 + x_2 - x_2^q, x_2) over GF(q), which is not a
    translation, and checks that it commutes with every translation and
    fixes every point of GF(q)^2

    Args:
        q: The field order, or the field
        cap: Largest allowed number of points, max_points() if omitted

    Returns:
        The report
    """
    field = _as_field(q)
    order = field.cardinality()
    ring = ParamRing(field)
    x2 = MultiPoly.variable(ring, 2, 2)
    f = elementary(ring, 2, 1, x2 - x2**order)

    exhaustive = order**2 <= translation_enumeration_limit()
    translations = _translations(field, 2, exhaustive)
    commutes = all(f.compose(tau) == tau.compose(f) for tau in translations)

    grid = PointGrid(field, 2, cap)
    table = grid.image_table(f)
    trivial = bool(np.array_equal(table, np.arange(grid.size())))

    return {
        "field": field.tag(),
        "map": str(f),
        "is_translation": f.is_translation(),
        "translations_checked": len(translations),
        "translations_exhaustive": exhaustive,
        "commutes_with_translations": commutes,
        "acts_trivially": trivial,
        "verified": commutes and trivial and not f.is_translation(),
    }
