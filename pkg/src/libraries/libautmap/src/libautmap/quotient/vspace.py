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
The subspace V of GF(q)[x] spanned by s - a s(ax + b), a != 0, and the
classes of GF(q)[x]/V.

Since R(ax + b) = a R, the generator built from s = m_{i,j} is
(x^i - a^(j+1) (ax + b)^i) R^j. It lies in the j-th stratum
span{m_{u,j} : u <= i} and its coefficient on m_{i,j} is 1 - a^(i+j+1).
V is therefore the direct sum of its strata V_j, each a subspace of a
q-dimensional space, and membership is decided stratum by stratum. The
generator vectors depend on j only through j mod (q - 1), so the reduced
echelon form of V_j is shared by all strata in a residue class.
"""

import logging
import threading
from math import comb
from typing import Dict, List, Optional, Tuple

from ..errors import FieldTooLarge, InputError
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, RawValue, parse_field
from ..ring.scalar import Scalar
from ..settings import max_quotient_field
from .mbasis import MCoordinates, raw_from_m_coordinates, raw_m_coordinates, univariate_coefficients, univariate_poly

log = logging.getLogger(__name__)

GeneratorKey = Tuple[int, RawValue, RawValue]

MAX_INDEPENDENCE_CLASSES = 5


def quotient_field(q) -> FieldDesc:
    """
    Returns the field of order q (or q itself when it is a field), checked
    against the quotient cardinality cap
    """
    field = q if isinstance(q, FieldDesc) else parse_field(f"GF({int(q):d})")
    order = field.require_finite("The quotient by V")
    if order > max_quotient_field():
        msg = f"Quotient computations are capped at fields of order {max_quotient_field():d}, got {order:d}"
        raise FieldTooLarge(msg)
    return field


class StratumEchelon:
    """
    Reduced echelon form of one stratum V_j, as vectors on m_{0,j} ..
    m_{q-1,j}. Pivots are the highest nonzero index of each row, and every
    row records the generators (i, a, b) it is a combination of
    """

    def __init__(self, field: FieldDesc, residue: int):
        """
        Constructor for StratumEchelon

        Args:
            field: The finite field
            residue: j mod (q - 1) for the strata this echelon serves
        """
        self.__field = field
        self.__q = field.cardinality()
        self.__residue = residue
        self.__rows: Dict[int, Tuple[List[RawValue], Dict[GeneratorKey, RawValue]]] = {}
        self.__build()

    def field(self) -> FieldDesc:
        return self.__field

    def rank(self) -> int:
        return len(self.__rows)

    def __generator(self, i: int, a: RawValue, b: RawValue) -> List[RawValue]:
        f = self.__field
        factor = f.pow(a, self.__residue + 1)
        vector = [f.zero()] * self.__q
        vector[i] = f.one()
        for u in range(i + 1):
            # coefficient of x^u in (ax + b)^i
            c = f.times_int(f.mul(f.pow(a, u), f.pow(b, i - u)), comb(i, u))
            vector[u] = f.sub(vector[u], f.mul(factor, c))
        return vector

    def reduce(self, vector: List[RawValue]) -> Tuple[List[RawValue], Dict[GeneratorKey, RawValue]]:
        """
        Reduces a stratum vector against the echelon rows

        Args:
            vector: Coordinates on m_{0,j} .. m_{q-1,j}

        Returns:
            Tuple of the remainder, which vanishes on every pivot, and the
            generator combination that was subtracted
        """
        f = self.__field
        vector = list(vector)
        combination: Dict[GeneratorKey, RawValue] = {}
        for pivot in sorted(self.__rows, reverse=True):
            c = vector[pivot]
            if f.is_zero(c):
                continue
            row, expression = self.__rows[pivot]
            vector = [f.sub(x, f.mul(c, y)) for x, y in zip(vector, row)]
            for key, coefficient in expression.items():
                value = f.add(combination.get(key, f.zero()), f.mul(c, coefficient))
                if f.is_zero(value):
                    combination.pop(key, None)
                else:
                    combination[key] = value
        return vector, combination

    def __insert(self, key: GeneratorKey, vector: List[RawValue]) -> None:
        f = self.__field
        vector, combination = self.reduce(vector)
        pivot = next((k for k in range(self.__q - 1, -1, -1) if not f.is_zero(vector[k])), None)
        if pivot is None:
            return

        # row = (generator - combination) / vector[pivot]
        scale = f.inv(vector[pivot])
        vector = [f.mul(x, scale) for x in vector]
        expression = {k: f.neg(f.mul(v, scale)) for k, v in combination.items()}
        expression[key] = f.add(expression.get(key, f.zero()), scale)

        for other, (row, other_expression) in list(self.__rows.items()):
            c = row[pivot]
            if f.is_zero(c):
                continue
            new_row = [f.sub(x, f.mul(c, y)) for x, y in zip(row, vector)]
            new_expression = dict(other_expression)
            for k, v in expression.items():
                value = f.sub(new_expression.get(k, f.zero()), f.mul(c, v))
                if f.is_zero(value):
                    new_expression.pop(k, None)
                else:
                    new_expression[k] = value
            self.__rows[other] = (new_row, new_expression)
        self.__rows[pivot] = (vector, expression)

    def __build(self) -> None:
        """
        Row reduces the generators in order of i. A generator of index i
        only touches coordinates u <= i, so once the coordinates below i
        are all pivots a generator with diagonal coefficient
        1 - a^(i+j+1) = 0 is already in the span and is skipped, and once
        every coordinate up to i is a pivot the remaining generators of
        index i are too
        """
        f = self.__field
        units = [a for a in f.elements() if not f.is_zero(a)]
        for i in range(self.__q):
            for a in units:
                if self.rank() == i + 1:
                    break
                diagonal = f.sub(f.one(), f.pow(a, i + self.__residue + 1))
                if f.is_zero(diagonal) and self.rank() == i:
                    continue
                for b in f.elements():
                    self.__insert((i, a, b), self.__generator(i, a, b))
                    if self.rank() == i + 1:
                        break
        log.debug(
            f"Stratum echelon for {f.tag():s}, residue {self.__residue:d}: rank {self.rank():d}"
        )


_cache: Dict[Tuple[FieldDesc, int], StratumEchelon] = {}
_cache_lock = threading.Lock()


def stratum_echelon(field: FieldDesc, j: int) -> StratumEchelon:
    """
    Returns the memoized echelon form of V_j
    """
    residue = j % (field.cardinality() - 1)
    key = (field, residue)
    echelon = _cache.get(key)
    if echelon is not None:
        return echelon
    with _cache_lock:
        if key not in _cache:
            _cache[key] = StratumEchelon(field, residue)
        return _cache[key]


class VBasisRep:
    """
    The strata V_0 .. V_J of V for a finite field
    """

    def __init__(self, field: FieldDesc, bound: int):
        """
        Constructor for VBasisRep

        Args:
            field: The finite field
            bound: The largest stratum J
        """
        if bound < 0:
            msg = "The stratum bound must be nonnegative"
            raise InputError(msg)
        self.__field = field
        self.__bound = bound
        self.__strata = [stratum_echelon(field, j) for j in range(bound + 1)]

    def field(self) -> FieldDesc:
        return self.__field

    def bound(self) -> int:
        return self.__bound

    def stratum(self, j: int) -> StratumEchelon:
        return self.__strata[j]


class VClass:
    """
    A class of GF(q)[x]/V, stored as its canonical remainder: the
    coordinates on the m_{i,j} that are not echelon pivots. With
    modulo_linear the class is taken in GF(q)[x]/(V + k x)
    """

    def __init__(self, field: FieldDesc, coordinates: MCoordinates, modulo_linear: bool = False):
        self.__field = field
        self.__modulo_linear = modulo_linear
        self.__coordinates = {
            k: v for k, v in coordinates.items() if not field.is_zero(v)
        }
        if modulo_linear:
            self.__coordinates.pop((1, 0), None)

    @staticmethod
    def zero(field: FieldDesc, modulo_linear: bool = False) -> "VClass":
        return VClass(field, {}, modulo_linear)

    def field(self) -> FieldDesc:
        return self.__field

    def modulo_linear(self) -> bool:
        return self.__modulo_linear

    def coordinates(self) -> MCoordinates:
        return dict(self.__coordinates)

    def is_zero(self) -> bool:
        return not self.__coordinates

    def representative(self) -> MultiPoly:
        return univariate_poly(self.__field, raw_from_m_coordinates(self.__field, self.__coordinates))

    def __add__(self, other: "VClass") -> "VClass":
        return class_add(self, other)

    def scaled(self, c: RawValue) -> "VClass":
        f = self.__field
        return VClass(f, {k: f.mul(v, c) for k, v in self.__coordinates.items()}, self.__modulo_linear)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VClass):
            return NotImplemented
        return (
            self.__field == other.field()
            and self.__modulo_linear == other.modulo_linear()
            and self.__coordinates == other.coordinates()
        )

    def __hash__(self) -> int:
        return hash((self.__field, self.__modulo_linear, tuple(sorted(self.__coordinates.items()))))

    def __repr__(self) -> str:
        return f"VClass({self.__field.tag():s}, {self!s:s})"

    def __str__(self) -> str:
        return f"[{self.representative()!s:s}]"

    def to_dict(self) -> dict:
        f = self.__field
        return {
            "field": f.tag(),
            "representative": str(self.representative()),
            "coordinates": [
                {"i": i, "j": j, "coefficient": f.format(c)}
                for (i, j), c in sorted(self.__coordinates.items(), key=lambda x: (x[0][1], x[0][0]))
            ],
            "zero": self.is_zero(),
            "modulo_linear": self.__modulo_linear,
        }


def class_add(c1: VClass, c2: VClass) -> VClass:
    """
    Adds two classes. Remainders are linear in the input, so the sum of
    two canonical remainders is canonical

    Args:
        c1: A class
        c2: A class over the same field and quotient

    Returns:
        The sum
    """
    f = c1.field()
    if f != c2.field() or c1.modulo_linear() != c2.modulo_linear():
        msg = "Cannot add classes of different quotients"
        raise InputError(msg)
    coords = c1.coordinates()
    for k, v in c2.coordinates().items():
        coords[k] = f.add(coords.get(k, f.zero()), v)
    return VClass(f, coords, c1.modulo_linear())


class VMembership:
    """
    The answer to s in V with its certificate: the generator combination
    sum c (m_{i,j} - a m_{i,j}(ax + b)) equal to s minus its remainder, and
    the remainder itself, zero exactly for members
    """

    def __init__(self, s: MultiPoly, bound: int, remainder: VClass, combination: List[dict]):
        self.__s = s
        self.__bound = bound
        self.__remainder = remainder
        self.__combination = combination

    def member(self) -> bool:
        return self.__remainder.is_zero()

    def __bool__(self) -> bool:
        return self.member()

    def remainder(self) -> VClass:
        return self.__remainder

    def combination(self) -> List[dict]:
        return self.__combination

    def to_dict(self) -> dict:
        return {
            "polynomial": str(self.__s),
            "field": self.__remainder.field().tag(),
            "stratum_bound": self.__bound,
            "member": self.member(),
            "remainder": self.__remainder.to_dict(),
            "combination": self.__combination,
        }


def _reduce_coordinates(field: FieldDesc, coords: MCoordinates, bound: int):
    q = field.cardinality()
    rep = VBasisRep(field, bound)
    remainder: MCoordinates = {}
    certificate = []
    for j in range(bound + 1):
        vector = [coords.get((i, j), field.zero()) for i in range(q)]
        if all(field.is_zero(x) for x in vector):
            continue
        rem, combination = rep.stratum(j).reduce(vector)
        for i, c in enumerate(rem):
            if not field.is_zero(c):
                remainder[(i, j)] = c
        for (i, a, b), c in sorted(combination.items()):
            certificate.append(
                {"i": i, "j": j, "a": field.format(a), "b": field.format(b), "coefficient": field.format(c)}
            )
    return remainder, certificate


def _needed_bound(field: FieldDesc, coords: MCoordinates) -> int:
    return max((j for _, j in coords), default=0)


def v_class(s: MultiPoly, modulo_linear: bool = False) -> VClass:
    """
    Returns the class of a polynomial of GF(q)[x_1] in GF(q)[x]/V

    Args:
        s: A polynomial in x_1 only
        modulo_linear: Take the class in GF(q)[x]/(V + k x)

    Returns:
        The class
    """
    field = quotient_field(s.field())
    coords = raw_m_coordinates(field, univariate_coefficients(s))
    remainder, _ = _reduce_coordinates(field, coords, _needed_bound(field, coords))
    return VClass(field, remainder, modulo_linear)


def v_membership(s: MultiPoly, bound: Optional[int] = None) -> VMembership:
    """
    Decides whether s lies in V by reduction in each stratum up to J

    Args:
        s: A polynomial in x_1 only over a finite field
        bound: The stratum bound J, at least deg(s) / q; defaults to the
            smallest valid value

    Returns:
        The verdict with its certificate
    """
    field = quotient_field(s.field())
    coords = raw_m_coordinates(field, univariate_coefficients(s))
    needed = _needed_bound(field, coords)
    if bound is None:
        bound = needed
    elif bound < needed:
        msg = f"Stratum bound {bound:d} is below deg(s) / q = {needed:d}"
        raise InputError(msg)
    remainder, certificate = _reduce_coordinates(field, coords, bound)
    result = VMembership(s, bound, VClass(field, remainder), certificate)
    log.debug(f"Membership of {s!s:s} in V: {result.member()!s:s}")
    return result


def independence_classes(field: FieldDesc, count: int) -> List[VClass]:
    """
    Returns the classes of x^(q-1) R^(m(q-1)-1) for m = 1..count
    """
    q = field.cardinality()
    return [
        VClass(field, {(q - 1, m * (q - 1) - 1): field.one()})
        for m in range(1, count + 1)
    ]


def independence_check(q, count: int) -> bool:
    """
    Checks that the classes of x^(q-1) R^(m(q-1)-1), m = 1..count, are
    linearly independent in GF(q)[x]/V

    Args:
        q: The field order, or the field
        count: The number of classes, at most 5

    Returns:
        True if no nontrivial combination vanishes
    """
    if count < 0 or count > MAX_INDEPENDENCE_CLASSES:
        msg = f"Class count must lie in 0..{MAX_INDEPENDENCE_CLASSES:d}"
        raise InputError(msg)
    field = quotient_field(q)
    if count == 0:
        return True

    reduced = []
    for c in independence_classes(field, count):
        coords = c.coordinates()
        remainder, _ = _reduce_coordinates(field, coords, _needed_bound(field, coords))
        reduced.append(remainder)

    # rank of the remainders as vectors over the union of their supports
    support = sorted({k for r in reduced for k in r})
    rows = [[r.get(k, field.zero()) for k in support] for r in reduced]
    rank = 0
    for col in range(len(support)):
        pivot = next((r for r in range(rank, len(rows)) if not field.is_zero(rows[r][col])), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(x, inv) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not field.is_zero(rows[r][col]):
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank == count
