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

from typing import List, Optional, Union

from ..errors import FieldMismatch, InputError
from .fields import FieldDesc, RawValue


class Scalar:
    """
    An element of an exact coefficient field. The stored value is always the
    canonical representative, so equality is structural
    """

    def __init__(self, field: FieldDesc, value):
        """
        Constructor for Scalar

        Args:
            field: The field the scalar belongs to
            value: An int, a Fraction or a raw encoded value of the field
        """
        self.__field = field
        self.__value = field.normalize(value)

    def field(self) -> FieldDesc:
        return self.__field

    def value(self) -> RawValue:
        """
        Returns the raw canonical value, a Fraction over QQ and an integer
        encoding over finite fields

        Returns:
            The raw value
        """
        return self.__value

    def __coerce(self, other) -> RawValue:
        if isinstance(other, Scalar):
            if other.field() != self.__field:
                msg = f"Cannot combine {self.__field.tag():s} and {other.field().tag():s} scalars"
                raise FieldMismatch(msg)
            return other.value()
        if isinstance(other, int):
            return self.__field.from_int(other)
        msg = f"Cannot combine a scalar with {type(other).__name__:s}"
        raise InputError(msg)

    def __wrap(self, value: RawValue) -> "Scalar":
        return Scalar(self.__field, value)

    def __add__(self, other) -> "Scalar":
        return self.__wrap(self.__field.add(self.__value, self.__coerce(other)))

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        return self.__wrap(self.__field.sub(self.__value, self.__coerce(other)))

    def __rsub__(self, other) -> "Scalar":
        return self.__wrap(self.__field.sub(self.__coerce(other), self.__value))

    def __mul__(self, other) -> "Scalar":
        return self.__wrap(self.__field.mul(self.__value, self.__coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        return self.__wrap(self.__field.div(self.__value, self.__coerce(other)))

    def __rtruediv__(self, other) -> "Scalar":
        return self.__wrap(self.__field.div(self.__coerce(other), self.__value))

    def __neg__(self) -> "Scalar":
        return self.__wrap(self.__field.neg(self.__value))

    def __pow__(self, k: int) -> "Scalar":
        return self.__wrap(self.__field.pow(self.__value, k))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.__value == self.__field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.__field == other.field() and self.__value == other.value()

    def __hash__(self) -> int:
        return hash((self.__field, self.__value))

    def __repr__(self) -> str:
        return f"Scalar({self.__field.tag():s}, {self!s:s})"

    def __str__(self) -> str:
        return self.__field.format(self.__value)

    def is_zero(self) -> bool:
        return self.__field.is_zero(self.__value)

    def inverse(self) -> "Scalar":
        return self.__wrap(self.__field.inv(self.__value))


def scalar_arith(op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    """
    Exact field arithmetic on scalars

    Args:
        op: One of add, sub, mul, div, neg, inv
        a: The first operand
        b: The second operand for the binary operations

    Returns:
        The result in canonical form
    """
    if op in ("neg", "inv"):
        return -a if op == "neg" else a.inverse()

    if b is None:
        msg = f"Operation {op:s} requires two operands"
        raise InputError(msg)

    if op == "add":
        return a + b
    elif op == "sub":
        return a - b
    elif op == "mul":
        return a * b
    elif op == "div":
        return a / b
    else:
        msg = f"Invalid scalar operation: {op:s}"
        raise InputError(msg)


def scalar_pow(a: Scalar, k: int) -> Scalar:
    """
    Integer powers of a scalar, negative exponents go through the inverse

    Args:
        a: The base
        k: The exponent

    Returns:
        a^k
    """
    return a**k


def field_elements(field: FieldDesc) -> List[Scalar]:
    """
    Enumerates a finite field in canonical order

    Args:
        field: The field, must be finite

    Returns:
        List of all elements
    """
    return [Scalar(field, v) for v in field.elements()]


def make_scalar(field: FieldDesc, value: Union[int, "Scalar"]) -> Scalar:
    if isinstance(value, Scalar):
        if value.field() != field:
            msg = f"Scalar from {value.field().tag():s} used in {field.tag():s}"
            raise FieldMismatch(msg)
        return value
    return Scalar(field, field.from_fraction(value))


def parse_scalar(text: str, field: FieldDesc) -> Scalar:
    return Scalar(field, field.parse(text))


def format_scalar(a: Scalar) -> str:
    return str(a)
