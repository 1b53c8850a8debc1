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

from typing import List, Optional, Tuple

from ..endo.endo import Endo
from ..ring.scalar import Scalar


class DegenerationCertificate:
    """
    Everything needed to re-check a degeneration of a family g over k[t]
    to a translation: the slope (a, b), the shift vector epsilon, the
    conjugated family h and its value at t = 0, and the parameter values
    at which h was compared against a direct composition
    """

    def __init__(
        self,
        family: Endo,
        slope: Tuple[int, int],
        witness: List[Scalar],
        conjugate: Endo,
        limit: Endo,
        sample_checks: List[Tuple[int, bool]],
        source: Optional[Endo] = None,
        direction: Optional[Endo] = None,
    ):
        """
        Constructor for DegenerationCertificate

        Args:
            family: The input family g with g(0) = id
            slope: The coprime pair (a, b)
            witness: The shift vector epsilon
            conjugate: The family h over k[t]
            limit: h at t = 0, a translation
            sample_checks: Pairs (t0, verified)
            source: The automorphism f the family was built from, if any
            direction: The translation used to build the commutator, if any
        """
        self.__family = family
        self.__slope = slope
        self.__witness = witness
        self.__conjugate = conjugate
        self.__limit = limit
        self.__sample_checks = sample_checks
        self.__source = source
        self.__direction = direction

    def family(self) -> Endo:
        return self.__family

    def slope(self) -> Tuple[int, int]:
        return self.__slope

    def witness(self) -> List[Scalar]:
        return self.__witness

    def conjugate(self) -> Endo:
        return self.__conjugate

    def limit(self) -> Endo:
        return self.__limit

    def sample_checks(self) -> List[Tuple[int, bool]]:
        return self.__sample_checks

    def source(self) -> Optional[Endo]:
        return self.__source

    def direction(self) -> Optional[Endo]:
        return self.__direction

    def nontrivial(self) -> bool:
        return not self.__limit.is_identity()

    def verified(self) -> bool:
        """
        Returns True if the limit is a translation and every sample check
        passed

        Returns:
            The overall verdict
        """
        return self.__limit.is_translation() and all(ok for _, ok in self.__sample_checks)

    def to_dict(self) -> dict:
        data = {
            "family": str(self.__family),
            "slope": list(self.__slope),
            "witness": [str(e) for e in self.__witness],
            "conjugate": str(self.__conjugate),
            "limit": str(self.__limit),
            "limit_is_translation": self.__limit.is_translation(),
            "nontrivial": self.nontrivial(),
            "sample_checks": [
                {"t0": t0, "verified": ok} for t0, ok in self.__sample_checks
            ],
            "verified": self.verified(),
        }
        if self.__source is not None:
            data["source"] = str(self.__source)
        if self.__direction is not None:
            data["direction"] = str(self.__direction)
        return data
