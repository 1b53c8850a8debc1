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

import re
from enum import Enum

from ..errors import InputError
from .fields import FieldDesc, parse_field


class RingKind(Enum):
    """
    Enumerated type for the parameter rings k, k[t] and k[t,1/t]
    """

    NO_PARAM = 1
    POLY_T = 2
    LAURENT_T = 3

    @staticmethod
    def from_string(s: str):
        """
        Get the ring kind from the suffix of a ring tag.

        Args:
            s (str): The suffix, i.e. "", "[t]" or "[t,1/t]".

        Returns:
            RingKind: The ring kind.
        """
        s = s.replace(" ", "")
        if s == "":
            return RingKind.NO_PARAM
        elif s == "[t]":
            return RingKind.POLY_T
        elif s in ("[t,1/t]", "[t,t^-1]"):
            return RingKind.LAURENT_T
        else:
            msg = f"Invalid parameter ring: {s:s}"
            raise InputError(msg)

    def suffix(self) -> str:
        if self == RingKind.POLY_T:
            return "[t]"
        elif self == RingKind.LAURENT_T:
            return "[t,1/t]"
        return ""


class ParamRing:
    """
    Coefficient ring of a polynomial: a base field, optionally extended by
    the parameter t (polynomially or as Laurent polynomials)
    """

    def __init__(self, field: FieldDesc, kind: RingKind = RingKind.NO_PARAM):
        """
        Constructor for ParamRing

        Args:
            field: The base field
            kind: Which parameter ring to use over the field
        """
        self.__field = field
        self.__kind = kind

    def field(self) -> FieldDesc:
        return self.__field

    def kind(self) -> RingKind:
        return self.__kind

    def has_parameter(self) -> bool:
        return self.__kind != RingKind.NO_PARAM

    def allows_negative_t(self) -> bool:
        return self.__kind == RingKind.LAURENT_T

    def with_kind(self, kind: RingKind) -> "ParamRing":
        return ParamRing(self.__field, kind)

    def tag(self) -> str:
        return self.__field.tag() + self.__kind.suffix()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamRing):
            return NotImplemented
        return self.__field == other.field() and self.__kind == other.kind()

    def __hash__(self) -> int:
        return hash((self.__field, self.__kind))

    def __repr__(self) -> str:
        return f"ParamRing({self.tag():s})"


_RING_TAG = re.compile(r"^\s*(QQ|Q|GF\([^)]*\))\s*(\[[^\]]*\])?\s*$")


def parse_ring(text: str) -> ParamRing:
    """
    Parses a ring tag such as QQ, GF(2^2)[t] or QQ[t,1/t]

    Args:
        text: The ring tag

    Returns:
        The parameter ring
    """
    match = _RING_TAG.match(text)
    if match is None:
        msg = f"Invalid ring '{text:s}'"
        raise InputError(msg)
    field = parse_field(match.group(1))
    kind = RingKind.from_string(match.group(2) or "")
    return ParamRing(field, kind)
