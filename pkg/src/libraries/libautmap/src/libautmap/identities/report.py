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
from typing import Dict, Optional, Sequence, Union

from ..endo.endo import Endo
from ..errors import ZeroScalar
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc, field_make
from ..ring.scalar import Scalar, make_scalar

log = logging.getLogger(__name__)

Side = Union[Endo, MultiPoly]


class IdentityReport:
    """
    The outcome of checking one explicit identity between maps (or
    polynomials) by exact composition. The verdict is canonical form
    equality of the two sides
    """

    def __init__(self, name: str, parameters: Dict[str, object], lhs: Side, rhs: Side):
        """
        Constructor for IdentityReport

        Args:
            name: Short name of the identity
            parameters: The parameter assignment, printed with str()
            lhs: The side computed by composition
            rhs: The closed form
        """
        self.__name = name
        self.__parameters = parameters
        self.__lhs = lhs
        self.__rhs = rhs
        self.__verdict = lhs == rhs
        if not self.__verdict:
            log.warning(f"Identity {name:s} failed: {lhs!s:s} != {rhs!s:s}")

    def name(self) -> str:
        return self.__name

    def parameters(self) -> Dict[str, object]:
        return self.__parameters

    def lhs(self) -> Side:
        return self.__lhs

    def rhs(self) -> Side:
        return self.__rhs

    def verdict(self) -> bool:
        return self.__verdict

    def __bool__(self) -> bool:
        return self.__verdict

    def __repr__(self) -> str:
        return f"IdentityReport({self.__name:s}, verdict={self.__verdict!s:s})"

    def to_dict(self) -> dict:
        return {
            "identity": self.__name,
            "parameters": {k: _format_parameter(v) for k, v in self.__parameters.items()},
            "lhs": str(self.__lhs),
            "rhs": str(self.__rhs),
            "verdict": self.__verdict,
        }


def _format_parameter(value) -> object:
    if isinstance(value, (list, tuple)):
        return [_format_parameter(v) for v in value]
    if isinstance(value, int):
        return value
    return str(value)


def as_scalars(field: FieldDesc, values: Sequence) -> list:
    return [make_scalar(field, v) for v in values]


def require_nonzero(values: Sequence[Scalar], label: str) -> None:
    for v in values:
        if v.is_zero():
            msg = f"Parameter {label:s} must be nonzero"
            raise ZeroScalar(msg)


def infer_field(values: Sequence, field: Optional[FieldDesc] = None) -> FieldDesc:
    """
    Returns field if given, otherwise the field of the first Scalar among
    values, falling back to QQ for plain numbers
    """
    if field is not None:
        return field
    for v in values:
        if isinstance(v, Scalar):
            return v.field()
    return field_make(0)
