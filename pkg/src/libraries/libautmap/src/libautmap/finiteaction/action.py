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
import math
from functools import reduce
from typing import Dict, List, Optional

import numpy as np
from numba import njit

from ..endo.endo import Endo
from ..errors import InputError, RingMismatch, TooManyPoints
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.scalar import Scalar
from ..settings import max_points
from .arrays import FieldArrays

log = logging.getLogger(__name__)


class PointGrid:
    """
    The points of k^n for a finite field k of order q, indexed in mixed
    radix order: the point (c_1, ..., c_n) of raw encodings has index
    c_1 q^(n-1) + ... + c_n, so x_1 is the most significant digit
    """

    def __init__(self, field: FieldDesc, n: int, cap: Optional[int] = None):
        """
        Constructor for PointGrid

        Args:
            field: A finite field
            n: The dimension
            cap: Largest allowed number of points, max_points() if omitted
        """
        q = field.require_finite("The point action")
        if cap is None:
            cap = max_points()
        size = q**n
        if size > cap:
            msg = f"{field.tag():s}^{n:d} has {size:d} points, above the cap {cap:d}"
            raise TooManyPoints(msg)

        self.__field = field
        self.__arrays = FieldArrays(field)
        self.__q = q
        self.__n = n
        self.__size = size
        self.__coordinates = None

    def field(self) -> FieldDesc:
        return self.__field

    def arrays(self) -> FieldArrays:
        return self.__arrays

    def dimension(self) -> int:
        return self.__n

    def size(self) -> int:
        return self.__size

    def coordinates(self) -> np.ndarray:
        """
        Returns the n x q^n array whose column j is the point of index j

        Returns:
            The coordinate array
        """
        if self.__coordinates is None:
            index = np.arange(self.__size, dtype=np.int64)
            rows = []
            for i in range(self.__n):
                place = self.__q ** (self.__n - 1 - i)
                rows.append((index // place) % self.__q)
            self.__coordinates = np.array(rows, dtype=np.int64).reshape(self.__n, self.__size)
        return self.__coordinates

    def index_of(self, columns: List[np.ndarray]) -> np.ndarray:
        index = np.zeros(self.__size, dtype=np.int64)
        for column in columns:
            index = index * self.__q + column
        return index

    def point(self, index: int) -> List[Scalar]:
        values = []
        for i in range(self.__n):
            place = self.__q ** (self.__n - 1 - i)
            values.append(Scalar(self.__field, (index // place) % self.__q))
        return values

    def evaluate(self, p: MultiPoly) -> np.ndarray:
        """
        Evaluates a parameter free polynomial at every point

        Args:
            p: The polynomial over the grid field

        Returns:
            The values, indexed like the points
        """
        if p.has_t():
            msg = "Cannot evaluate a polynomial that involves t on points"
            raise RingMismatch(msg)
        arrays = self.__arrays
        coords = self.coordinates()
        powers: Dict[tuple, np.ndarray] = {}
        total = np.zeros(self.__size, dtype=np.int64)
        for e, c in p.terms().items():
            term = np.full(self.__size, c, dtype=np.int64)
            for i, ei in enumerate(e[1:]):
                if ei == 0:
                    continue
                if (i, ei) not in powers:
                    powers[(i, ei)] = arrays.pow(coords[i], ei)
                term = arrays.mul(term, powers[(i, ei)])
            total = arrays.add(total, term)
        return total

    def image_table(self, f: Endo) -> np.ndarray:
        """
        Returns the array mapping each point index to the index of its image

        Args:
            f: A parameter free map over the grid field

        Returns:
            The image table
        """
        if f.field() != self.__field or f.dimension() != self.__n:
            msg = f"Map over {f.field().tag():s} in dimension {f.dimension():d} does not act on this grid"
            raise RingMismatch(msg)
        return self.index_of([self.evaluate(c) for c in f.components()])


class PermRep:
    """
    The permutation (or, for a non bijective endomorphism, the self map)
    induced by a polynomial map on the points of k^n
    """

    def __init__(self, grid: PointGrid, source: Endo, table: np.ndarray):
        """
        Constructor for PermRep

        Args:
            grid: The point grid
            source: The map the table was computed from
            table: The image table
        """
        self.__grid = grid
        self.__source = source
        self.__table = table
        self.__bijective = np.unique(table).size == table.size
        self.__cycles = None
        if self.__bijective:
            self.__cycles = PermRep.__cycle_lengths(table)

    @staticmethod
    @njit
    def __cycle_lengths(table: np.ndarray) -> np.ndarray:
        """
        Returns the lengths of the cycles of a permutation, in order of
        their smallest point
        """
        size = table.shape[0]
        seen = np.zeros(size, dtype=np.bool_)
        lengths = np.empty(size, dtype=np.int64)
        count = 0
        for start in range(size):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = table[j]
                length += 1
            lengths[count] = length
            count += 1
        return lengths[:count]

    def q(self) -> int:
        return self.__grid.field().cardinality()

    def n(self) -> int:
        return self.__grid.dimension()

    def grid(self) -> PointGrid:
        return self.__grid

    def source(self) -> Endo:
        return self.__source

    def table(self) -> np.ndarray:
        return self.__table

    def bijective(self) -> bool:
        return bool(self.__bijective)

    def __require_bijective(self) -> np.ndarray:
        if not self.__bijective:
            msg = "The map does not permute the points"
            raise InputError(msg)
        return self.__cycles

    def cycle_type(self) -> Optional[Dict[int, int]]:
        """
        Returns the cycle type as a map from cycle length to multiplicity,
        or None when the map is not bijective

        Returns:
            The cycle type
        """
        if not self.__bijective:
            return None
        lengths, counts = np.unique(self.__cycles, return_counts=True)
        return {int(k): int(v) for k, v in zip(lengths, counts)}

    def num_cycles(self) -> int:
        return int(self.__require_bijective().size)

    def sign(self) -> Optional[int]:
        if not self.__bijective:
            return None
        return -1 if (self.__table.size - self.__cycles.size) % 2 else 1

    def fixed_points(self) -> int:
        return int(np.count_nonzero(self.__table == np.arange(self.__table.size)))

    def order(self) -> int:
        lengths = self.__require_bijective()
        return reduce(math.lcm, (int(x) for x in np.unique(lengths)), 1)

    def to_dict(self) -> dict:
        cycle_type = self.cycle_type()
        return {
            "field": self.__grid.field().tag(),
            "dimension": self.n(),
            "points": int(self.__table.size),
            "bijective": self.bijective(),
            "cycle_type": None
            if cycle_type is None
            else [{"length": k, "count": v} for k, v in cycle_type.items()],
            "sign": self.sign(),
            "fixed_points": self.fixed_points(),
        }


def permutation_of(f: Endo, cap: Optional[int] = None) -> PermRep:
    """
    Evaluates a map over a finite field at every point of k^n

    Args:
        f: A parameter free map over GF(q)
        cap: Largest allowed number of points, max_points() if omitted

    Returns:
        The induced permutation, flagged non bijective when it is not one
    """
    if f.ring().has_parameter():
        msg = "Expected a parameter free map"
        raise RingMismatch(msg)
    grid = PointGrid(f.field(), f.dimension(), cap)
    rep = PermRep(grid, f, grid.image_table(f))
    log.debug(f"Permutation of {grid.size():d} points, sign {rep.sign()!s:s}")
    return rep


def fixed_locus_count(f: Endo, cap: Optional[int] = None) -> int:
    return permutation_of(f, cap).fixed_points()


def permutation_order(rep: PermRep) -> int:
    """
    Returns the order of a permutation, the lcm of its cycle lengths

    Args:
        rep: A bijective permutation

    Returns:
        The order
    """
    return rep.order()
