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
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from ..errors import (
    CardinalityTooLarge,
    DivisionByZero,
    InputError,
    NotPrime,
)
from ..settings import MAX_FIELD_CARDINALITY
from . import gfpx

log = logging.getLogger(__name__)

# Raw field values: Fraction over QQ, int encodings of residue polynomials
# (base p digits, constant term least significant) over GF(p^r)
RawValue = Union[Fraction, int]


class FieldKind(Enum):
    """
    Enumerated type for the supported coefficient fields
    """

    RATIONALS = 1
    FINITE_FIELD = 2


class FieldDesc:
    """
    Description of an exact coefficient field, either QQ or GF(p^r).

    Values of the field are passed around "raw" (see RawValue) and all
    arithmetic on them goes through the methods of the field so that the
    polynomial layer never needs to know which field it works over.
    Extension fields multiply through discrete log tables built from the
    smallest primitive element, so construction is the expensive step and
    field_make caches the results.
    """

    def __init__(
        self, characteristic: int, degree: int = 1, modulus: Optional[List[int]] = None
    ):
        """
        Constructor for FieldDesc

        Args:
            characteristic: 0 for QQ, otherwise a prime p
            degree: The extension degree r over GF(p)
            modulus: Coefficients (constant term first) of a monic irreducible
                polynomial of degree r. If None, the lowest one is chosen
        """
        from sympy import isprime

        if not isinstance(characteristic, int) or not isinstance(degree, int):
            msg = "Characteristic and degree must be integers"
            raise InputError(msg)

        if degree < 1:
            msg = f"Extension degree must be positive, got {degree:d}"
            raise InputError(msg)

        self.__p = characteristic
        self.__r = degree
        self.__modulus = None
        self.__exp = None
        self.__log = None

        if characteristic == 0:
            if degree != 1:
                msg = "The rationals have no proper extensions here"
                raise InputError(msg)
            self.__kind = FieldKind.RATIONALS
            self.__q = None
            return

        if not isprime(characteristic):
            msg = f"Field characteristic {characteristic:d} is not prime"
            raise NotPrime(msg)

        self.__kind = FieldKind.FINITE_FIELD
        self.__q = characteristic**degree
        if self.__q > MAX_FIELD_CARDINALITY:
            msg = f"Field cardinality {characteristic:d}^{degree:d} exceeds {MAX_FIELD_CARDINALITY:d}"
            raise CardinalityTooLarge(msg)

        if degree > 1:
            if modulus is None:
                modulus = gfpx.lowest_irreducible(degree, characteristic)
            else:
                modulus = [int(c) % characteristic for c in modulus]
                if len(modulus) != degree + 1 or modulus[-1] != 1:
                    msg = f"Modulus must be monic of degree {degree:d}"
                    raise InputError(msg)
                if not gfpx.is_irreducible(modulus, characteristic):
                    msg = "Modulus is not irreducible"
                    raise InputError(msg)
            self.__modulus = tuple(modulus)
            self.__build_tables()

    def __build_tables(self) -> None:
        """
        Builds the exp and log tables of an extension field from its smallest
        primitive element
        """
        from sympy import primefactors

        order = self.__q - 1
        exponents = [order // ell for ell in primefactors(order)]
        generator = None
        for candidate in range(2, self.__q):
            if all(self.__slow_pow(candidate, e) != 1 for e in exponents):
                generator = candidate
                break

        if generator is None:
            msg = "No primitive element found"
            raise RuntimeError(msg)

        exp = [0] * order
        logs = [0] * self.__q
        value = 1
        for i in range(order):
            exp[i] = value
            logs[value] = i
            value = self.__slow_mul(value, generator)

        self.__generator = generator
        self.__exp = tuple(exp)
        self.__log = tuple(logs)
        log.debug(
            f"Built log tables for {self.tag():s} with primitive element {generator:d}"
        )

    def __slow_mul(self, a: int, b: int) -> int:
        p = self.__p
        if p == 2:
            m = gfpx.to_int(list(self.__modulus), 2)
            result = 0
            while b:
                if b & 1:
                    result ^= a
                b >>= 1
                a <<= 1
                if a >> self.__r:
                    a ^= m
            return result
        product = gfpx.mul(gfpx.from_int(a, p), gfpx.from_int(b, p), p)
        return gfpx.to_int(gfpx.mod(product, list(self.__modulus), p), p)

    def __slow_pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self.__slow_mul(result, a)
            a = self.__slow_mul(a, a)
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldDesc):
            return NotImplemented
        return (self.__p, self.__r, self.__modulus) == (
            other.characteristic(),
            other.degree(),
            other.modulus(),
        )

    def __hash__(self) -> int:
        return hash((self.__p, self.__r, self.__modulus))

    def __repr__(self) -> str:
        return f"FieldDesc({self.tag():s})"

    def kind(self) -> FieldKind:
        return self.__kind

    def characteristic(self) -> int:
        return self.__p

    def degree(self) -> int:
        return self.__r

    def modulus(self) -> Optional[Tuple[int, ...]]:
        """
        Returns the modulus of an extension field, constant term first, or
        None for QQ and prime fields

        Returns:
            The modulus coefficients
        """
        return self.__modulus

    def cardinality(self) -> Optional[int]:
        """
        Returns q = p^r, or None for QQ

        Returns:
            The number of elements of the field
        """
        return self.__q

    def is_finite(self) -> bool:
        return self.__kind == FieldKind.FINITE_FIELD

    def tag(self) -> str:
        """
        Returns the text tag of the field, i.e. QQ, GF(5) or GF(2^3)

        Returns:
            The field tag
        """
        if self.__kind == FieldKind.RATIONALS:
            return "QQ"
        elif self.__r == 1:
            return f"GF({self.__p:d})"
        else:
            return f"GF({self.__p:d}^{self.__r:d})"

    def tables(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """
        Returns the exp and log tables of an extension field. exp[i] is the
        encoding of g^i for the primitive element g and log inverts it on
        the nonzero elements

        Returns:
            Tuple of the exp table and the log table
        """
        if self.__exp is None:
            msg = f"{self.tag():s} has no log tables"
            raise InputError(msg)
        return self.__exp, self.__log

    def require_finite(self, operation: str) -> int:
        """
        Raises if the field is QQ, otherwise returns the cardinality

        Args:
            operation: Name of the calling operation, used in the message

        Returns:
            The cardinality q
        """
        if not self.is_finite():
            msg = f"{operation:s} requires a finite field, got {self.tag():s}"
            raise InputError(msg)
        return self.__q

    # Raw arithmetic

    def zero(self) -> RawValue:
        return Fraction(0) if self.__q is None else 0

    def one(self) -> RawValue:
        return Fraction(1) if self.__q is None else 1

    def generator(self) -> RawValue:
        """
        Returns the class of X in GF(p)[X]/(modulus), the element printed
        as [1,0] in GF(p^2). For prime fields and QQ this is 1

        Returns:
            The raw value of the generator
        """
        if self.__r > 1:
            return self.__p
        return self.one()

    def is_zero(self, a: RawValue) -> bool:
        return a == 0

    def from_int(self, n: int) -> RawValue:
        if self.__q is None:
            return Fraction(n)
        return n % self.__p

    def from_fraction(self, value: Fraction) -> RawValue:
        """
        Maps a rational number into the field

        Args:
            value: The rational number

        Returns:
            The raw value, the image of numerator / denominator
        """
        value = Fraction(value)
        if self.__q is None:
            return value
        if value.denominator % self.__p == 0:
            msg = f"Denominator of {value!s:s} vanishes in {self.tag():s}"
            raise DivisionByZero(msg)
        return (value.numerator * pow(value.denominator, -1, self.__p)) % self.__p

    def normalize(self, a) -> RawValue:
        """
        Validates a raw value and returns its canonical form

        Args:
            a: An int, Fraction, or encoded residue

        Returns:
            The canonical raw value
        """
        if self.__q is None:
            return Fraction(a)
        if isinstance(a, Fraction):
            return self.from_fraction(a)
        a = int(a)
        if self.__r == 1:
            return a % self.__p
        if a < 0 or a >= self.__q:
            msg = f"Encoded value {a:d} is outside {self.tag():s}"
            raise InputError(msg)
        return a

    def add(self, a: RawValue, b: RawValue) -> RawValue:
        if self.__q is None:
            return a + b
        if self.__r == 1:
            return (a + b) % self.__p
        if self.__p == 2:
            return a ^ b
        return self.__digitwise(a, b, 1)

    def sub(self, a: RawValue, b: RawValue) -> RawValue:
        if self.__q is None:
            return a - b
        if self.__r == 1:
            return (a - b) % self.__p
        if self.__p == 2:
            return a ^ b
        return self.__digitwise(a, b, -1)

    def __digitwise(self, a: int, b: int, sign: int) -> int:
        p = self.__p
        result = 0
        place = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            result += ((da + sign * db) % p) * place
            place *= p
        return result

    def neg(self, a: RawValue) -> RawValue:
        return self.sub(self.zero(), a)

    def mul(self, a: RawValue, b: RawValue) -> RawValue:
        if self.__q is None:
            return a * b
        if self.__r == 1:
            return (a * b) % self.__p
        if a == 0 or b == 0:
            return 0
        return self.__exp[(self.__log[a] + self.__log[b]) % (self.__q - 1)]

    def inv(self, a: RawValue) -> RawValue:
        if a == 0:
            msg = f"Division by zero in {self.tag():s}"
            raise DivisionByZero(msg)
        if self.__q is None:
            return 1 / a
        if self.__r == 1:
            return pow(a, -1, self.__p)
        return self.__exp[(-self.__log[a]) % (self.__q - 1)]

    def div(self, a: RawValue, b: RawValue) -> RawValue:
        return self.mul(a, self.inv(b))

    def pow(self, a: RawValue, k: int) -> RawValue:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if self.__q is None:
            return a**k
        if self.__r == 1:
            return pow(a, k, self.__p)
        if k == 0:
            return 1
        if a == 0:
            return 0
        return self.__exp[(self.__log[a] * k) % (self.__q - 1)]

    def times_int(self, a: RawValue, n: int) -> RawValue:
        """
        Returns n * a, the n-fold sum of a

        Args:
            a: The field value
            n: The integer multiplier

        Returns:
            The product reduced into the field
        """
        return self.mul(a, self.from_int(n))

    def elements(self) -> Iterator[RawValue]:
        """
        Iterates the field in canonical order (by integer encoding)

        Returns:
            Iterator over the raw values
        """
        if self.__q is None:
            msg = "QQ is not enumerable"
            raise InputError(msg)
        return iter(range(self.__q))

    def prime_basis(self) -> List[RawValue]:
        """
        Returns the basis 1, X, ..., X^(r-1) of the field over its prime
        field

        Returns:
            The basis as raw values
        """
        self.require_finite("prime_basis")
        return [self.__p**i for i in range(self.__r)]

    def digits(self, a: int) -> List[int]:
        """
        Returns the coefficients (c_{r-1}, ..., c_0) of a residue polynomial

        Args:
            a: The encoded value

        Returns:
            The digit list, highest power first
        """
        c = gfpx.from_int(a, self.__p)
        c += [0] * (self.__r - len(c))
        return list(reversed(c))

    # Text format

    def format(self, a: RawValue) -> str:
        if self.__q is None:
            return str(a)
        if self.__r == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.digits(a)) + "]"

    def parse(self, text: str) -> RawValue:
        """
        Parses a scalar in the text format of this field: a or a/b for QQ
        and prime fields, [c_{r-1},...,c_0] for GF(p^r)

        Args:
            text: The text to parse

        Returns:
            The raw value
        """
        s = text.strip()
        if s.startswith("["):
            if self.__q is None:
                msg = f"Coefficient lists are not valid in QQ: '{text:s}'"
                raise InputError(msg)
            if not s.endswith("]"):
                msg = f"Unterminated coefficient list '{text:s}'"
                raise InputError(msg)
            body = s[1:-1].strip()
            try:
                coefficients = [int(c) for c in body.split(",")] if body else []
            except ValueError:
                msg = f"Invalid coefficient list '{text:s}'"
                raise InputError(msg) from None
            if len(coefficients) > self.__r:
                msg = f"Coefficient list '{text:s}' is longer than the extension degree {self.__r:d}"
                raise InputError(msg)
            return gfpx.to_int(
                [c % self.__p for c in reversed(coefficients)], self.__p
            )

        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError):
            msg = f"Invalid scalar '{text:s}' for {self.tag():s}"
            raise InputError(msg) from None
        return self.from_fraction(value)


_FIELD_TAG = re.compile(r"^GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)$")


@lru_cache(maxsize=None)
def field_make(p: int, r: int = 1) -> FieldDesc:
    """
    Returns the field QQ (p = 0) or GF(p^r) with the lowest monic
    irreducible modulus

    Args:
        p: The characteristic
        r: The extension degree

    Returns:
        The field description
    """
    return FieldDesc(p, r)


def parse_field(text: str) -> FieldDesc:
    """
    Parses a field tag: QQ, GF(p), GF(p^r) or GF(q) for a prime power q

    Args:
        text: The field tag

    Returns:
        The field description
    """
    from sympy import factorint

    s = text.strip()
    if s in ("QQ", "Q"):
        return field_make(0, 1)

    match = _FIELD_TAG.match(s)
    if match is None:
        msg = f"Invalid field '{text:s}', expected QQ or GF(p^r)"
        raise InputError(msg)

    base = int(match.group(1))
    if match.group(2) is not None:
        return field_make(base, int(match.group(2)))

    if base > MAX_FIELD_CARDINALITY:
        msg = f"Field cardinality {base:d} exceeds {MAX_FIELD_CARDINALITY:d}"
        raise CardinalityTooLarge(msg)

    factors = factorint(base)
    if base < 2 or len(factors) != 1:
        msg = f"{base:d} is not a prime power"
        raise NotPrime(msg)
    ((p, r),) = factors.items()
    return field_make(int(p), int(r))
