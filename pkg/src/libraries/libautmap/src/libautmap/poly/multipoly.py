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
import operator
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..errors import InputError, NegativeTPower, RingMismatch
from ..ring.fields import FieldDesc, RawValue
from ..ring.paramring import ParamRing, RingKind
from ..ring.scalar import Scalar

log = logging.getLogger(__name__)

# Exponent vectors are (e_t, e_1, ..., e_n)
Exponent = Tuple[int, ...]
Terms = Dict[Exponent, RawValue]


def _canonical_key(e: Exponent):
    return sum(e[1:]), e[1:], e[0]


class MultiPoly:
    """
    Sparse polynomial in x1..xn with coefficients in a ParamRing. The
    parameter t is stored as the first entry of each exponent vector and
    may be negative only over the Laurent ring. Instances are treated as
    immutable, every operation returns a new polynomial
    """

    def __init__(
        self, ring: ParamRing, nvars: int, terms: Optional[Terms] = None, check=True
    ):
        """
        Constructor for MultiPoly

        Args:
            ring: The coefficient ring
            nvars: The number of x variables
            terms: Map from exponent vectors to raw coefficients
            check: Validate exponents and drop zero coefficients
        """
        if nvars < 1:
            msg = f"A polynomial needs at least one variable, got {nvars:d}"
            raise InputError(msg)

        self.__ring = ring
        self.__field = ring.field()
        self.__n = nvars

        if terms is None:
            self.__terms = {}
        elif check:
            self.__terms = self.__validate(terms)
        else:
            self.__terms = terms

    def __validate(self, terms: Terms) -> Terms:
        kind = self.__ring.kind()
        clean = {}
        for e, c in terms.items():
            if len(e) != self.__n + 1:
                msg = f"Exponent vector {e!s:s} does not match {self.__n:d} variables"
                raise InputError(msg)
            if any(ei < 0 for ei in e[1:]):
                msg = f"Negative x exponent in {e!s:s}"
                raise InputError(msg)
            c = self.__field.normalize(c)
            if self.__field.is_zero(c):
                continue
            if e[0] != 0 and kind == RingKind.NO_PARAM:
                msg = f"Parameter t used in the parameter free ring {self.__ring.tag():s}"
                raise RingMismatch(msg)
            if e[0] < 0 and kind == RingKind.POLY_T:
                msg = f"Negative power t^{e[0]:d} in {self.__ring.tag():s}"
                raise NegativeTPower(msg)
            clean[tuple(e)] = c
        return clean

    # Constructors

    @staticmethod
    def zero(ring: ParamRing, nvars: int) -> "MultiPoly":
        return MultiPoly(ring, nvars)

    @staticmethod
    def constant(ring: ParamRing, nvars: int, value) -> "MultiPoly":
        """
        Returns a constant polynomial

        Args:
            ring: The coefficient ring
            nvars: The number of variables
            value: A Scalar or a raw value of the field

        Returns:
            The constant polynomial
        """
        if isinstance(value, Scalar):
            value = value.value()
        return MultiPoly(ring, nvars, {(0,) * (nvars + 1): value})

    @staticmethod
    def integer(ring: ParamRing, nvars: int, k: int) -> "MultiPoly":
        return MultiPoly.constant(ring, nvars, ring.field().from_int(k))

    @staticmethod
    def one(ring: ParamRing, nvars: int) -> "MultiPoly":
        return MultiPoly.constant(ring, nvars, ring.field().one())

    @staticmethod
    def variable(ring: ParamRing, nvars: int, i: int) -> "MultiPoly":
        """
        Returns the coordinate x_i

        Args:
            ring: The coefficient ring
            nvars: The number of variables
            i: The variable index, starting at 1

        Returns:
            The polynomial x_i
        """
        if i < 1 or i > nvars:
            msg = f"Variable index {i:d} outside 1..{nvars:d}"
            raise InputError(msg)
        e = [0] * (nvars + 1)
        e[i] = 1
        return MultiPoly(ring, nvars, {tuple(e): ring.field().one()})

    @staticmethod
    def parameter(ring: ParamRing, nvars: int, power: int = 1) -> "MultiPoly":
        e = (power,) + (0,) * nvars
        return MultiPoly(ring, nvars, {e: ring.field().one()})

    @staticmethod
    def monomial(
        ring: ParamRing, nvars: int, exponent: Exponent, coefficient=None
    ) -> "MultiPoly":
        if coefficient is None:
            coefficient = ring.field().one()
        elif isinstance(coefficient, Scalar):
            coefficient = coefficient.value()
        return MultiPoly(ring, nvars, {tuple(exponent): coefficient})

    # Accessors

    def ring(self) -> ParamRing:
        return self.__ring

    def field(self) -> FieldDesc:
        return self.__field

    def nvars(self) -> int:
        return self.__n

    def terms(self) -> Terms:
        """
        Returns the term map. The map is shared with the polynomial and
        must not be modified

        Returns:
            Map from exponent vectors to raw coefficients
        """
        return self.__terms

    def sorted_terms(self) -> List[Tuple[Exponent, RawValue]]:
        """
        Returns the terms in canonical graded-lex order: descending x-degree,
        then descending x exponents, then descending t exponent

        Returns:
            List of (exponent, raw coefficient) pairs
        """
        return sorted(
            self.__terms.items(), key=lambda item: _canonical_key(item[0]), reverse=True
        )

    def coefficient(self, exponent: Exponent) -> RawValue:
        return self.__terms.get(tuple(exponent), self.__field.zero())

    def constant_term(self) -> RawValue:
        return self.coefficient((0,) * (self.__n + 1))

    def is_zero(self) -> bool:
        return not self.__terms

    def num_terms(self) -> int:
        return len(self.__terms)

    def x_degree(self) -> int:
        """
        Returns the total degree in x1..xn, t counts as a coefficient. The
        zero polynomial has degree -1

        Returns:
            The x-degree
        """
        if not self.__terms:
            return -1
        return max(sum(e[1:]) for e in self.__terms)

    def t_range(self) -> Tuple[int, int]:
        """
        Returns the smallest and largest exponent of t, (0, 0) for zero

        Returns:
            Tuple of the minimum and maximum t exponent
        """
        if not self.__terms:
            return 0, 0
        ts = [e[0] for e in self.__terms]
        return min(ts), max(ts)

    def has_t(self) -> bool:
        return any(e[0] != 0 for e in self.__terms)

    def involves(self, i: int) -> bool:
        return any(e[i] != 0 for e in self.__terms)

    # Arithmetic

    def __check_compatible(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            msg = f"Cannot combine a polynomial with {type(other).__name__:s}"
            raise InputError(msg)
        if other.ring() != self.__ring or other.nvars() != self.__n:
            msg = (
                f"Ring mismatch: {self.__ring.tag():s} in {self.__n:d} variables "
                f"vs {other.ring().tag():s} in {other.nvars():d} variables"
            )
            raise RingMismatch(msg)

    def __new(self, terms: Terms) -> "MultiPoly":
        return MultiPoly(self.__ring, self.__n, terms, check=False)

    def __coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self.__check_compatible(other)
            return other
        if isinstance(other, Scalar):
            if other.field() != self.__field:
                msg = f"Scalar from {other.field().tag():s} used in {self.__ring.tag():s}"
                raise RingMismatch(msg)
            return MultiPoly.constant(self.__ring, self.__n, other)
        if isinstance(other, int):
            return MultiPoly.integer(self.__ring, self.__n, other)
        msg = f"Cannot combine a polynomial with {type(other).__name__:s}"
        raise InputError(msg)

    def __add__(self, other) -> "MultiPoly":
        other = self.__coerce(other)
        f = self.__field
        terms = dict(self.__terms)
        for e, c in other.terms().items():
            if e in terms:
                s = f.add(terms[e], c)
                if f.is_zero(s):
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        return self.__new(terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        f = self.__field
        return self.__new({e: f.neg(c) for e, c in self.__terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self.__coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self.__coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (Scalar, int)):
            return self.scalar_mul(other)
        other = self.__coerce(other)
        return self.__new(self.__product(other.terms(), None))

    __rmul__ = __mul__

    def __product(self, other: Terms, degree_bound: Optional[int]) -> Terms:
        f = self.__field
        add = operator.add
        result = {}
        for ea, ca in self.__terms.items():
            da = sum(ea) - ea[0]
            for eb, cb in other.items():
                if degree_bound is not None and da + sum(eb) - eb[0] > degree_bound:
                    continue
                e = tuple(map(add, ea, eb))
                c = f.mul(ca, cb)
                if e in result:
                    result[e] = f.add(result[e], c)
                else:
                    result[e] = c
        return {e: c for e, c in result.items() if not f.is_zero(c)}

    def mul_truncated(self, other: "MultiPoly", degree_bound: int) -> "MultiPoly":
        """
        Product with every term of x-degree above degree_bound discarded

        Args:
            other: The second factor
            degree_bound: The largest x-degree kept

        Returns:
            The truncated product
        """
        self.__check_compatible(other)
        return self.__new(self.__product(other.terms(), degree_bound))

    def truncate(self, degree_bound: int) -> "MultiPoly":
        return self.__new(
            {e: c for e, c in self.__terms.items() if sum(e) - e[0] <= degree_bound}
        )

    def scalar_mul(self, value: Union[Scalar, int]) -> "MultiPoly":
        f = self.__field
        if isinstance(value, Scalar):
            if value.field() != f:
                msg = f"Scalar from {value.field().tag():s} used in {self.__ring.tag():s}"
                raise RingMismatch(msg)
            raw = value.value()
        else:
            raw = f.from_int(value)
        if f.is_zero(raw):
            return self.__new({})
        return self.__new({e: f.mul(c, raw) for e, c in self.__terms.items()})

    def raw_mul(self, raw: RawValue) -> "MultiPoly":
        f = self.__field
        if f.is_zero(raw):
            return self.__new({})
        return self.__new({e: f.mul(c, raw) for e, c in self.__terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            msg = "Negative powers of polynomials are not defined"
            raise InputError(msg)
        result = MultiPoly.one(self.__ring, self.__n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.__ring == other.ring()
            and self.__n == other.nvars()
            and self.__terms == other.terms()
        )

    def __hash__(self) -> int:
        return hash((self.__ring, self.__n, frozenset(self.__terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.__ring.tag():s}, {self!s:s})"

    def __str__(self) -> str:
        from .printer import format_poly

        return format_poly(self)

    # Ring changes

    def with_ring(self, ring: ParamRing) -> "MultiPoly":
        """
        Reinterprets the polynomial over another parameter ring with the
        same base field, i.e. QQ[t] to QQ[t,1/t] and back

        Args:
            ring: The target ring

        Returns:
            The same polynomial over the new ring
        """
        if ring.field() != self.__field:
            msg = f"Cannot move a polynomial from {self.__ring.tag():s} to {ring.tag():s}"
            raise RingMismatch(msg)
        return MultiPoly(ring, self.__n, dict(self.__terms))

    # Calculus and structure

    def partial_derivative(self, i: int) -> "MultiPoly":
        """
        Formal partial derivative with respect to x_i. Exponent multipliers
        are reduced into the field, so d(x^p)/dx vanishes in characteristic p

        Args:
            i: The variable index, starting at 1

        Returns:
            The derivative
        """
        if i < 1 or i > self.__n:
            msg = f"Variable index {i:d} outside 1..{self.__n:d}"
            raise InputError(msg)
        f = self.__field
        terms = {}
        for e, c in self.__terms.items():
            if e[i] == 0:
                continue
            d = f.times_int(c, e[i])
            if f.is_zero(d):
                continue
            new_e = list(e)
            new_e[i] -= 1
            terms[tuple(new_e)] = d
        return self.__new(terms)

    def homogeneous_part(self, m: int) -> "MultiPoly":
        return self.__new(
            {e: c for e, c in self.__terms.items() if sum(e) - e[0] == m}
        )

    def leading_form(self) -> "MultiPoly":
        return self.homogeneous_part(self.x_degree())

    def homogeneous_parts(self) -> Dict[int, "MultiPoly"]:
        parts: Dict[int, Terms] = {}
        for e, c in self.__terms.items():
            parts.setdefault(sum(e) - e[0], {})[e] = c
        return {m: self.__new(t) for m, t in parts.items()}

    def bigraded_parts(self) -> Dict[Tuple[int, int], "MultiPoly"]:
        """
        Splits the polynomial as a sum of q_{j,m} t^j where every q_{j,m} is
        free of t and homogeneous of x-degree m

        Returns:
            Map from (j, m) to the parameter free polynomial q_{j,m}
        """
        base = self.__ring.with_kind(RingKind.NO_PARAM)
        parts: Dict[Tuple[int, int], Terms] = {}
        for e, c in self.__terms.items():
            key = (e[0], sum(e) - e[0])
            parts.setdefault(key, {})[(0,) + e[1:]] = c
        return {
            key: MultiPoly(base, self.__n, t, check=False) for key, t in parts.items()
        }

    def evaluate(self, point: Iterable) -> Scalar:
        """
        Evaluates a parameter free polynomial at a point of k^n

        Args:
            point: n Scalars (or ints)

        Returns:
            The value
        """
        f = self.__field
        values = [v.value() if isinstance(v, Scalar) else f.from_int(v) for v in point]
        if len(values) != self.__n:
            msg = f"Point has {len(values):d} coordinates, expected {self.__n:d}"
            raise InputError(msg)
        if self.has_t():
            msg = "Cannot evaluate a polynomial that involves t at a point"
            raise RingMismatch(msg)
        total = f.zero()
        for e, c in self.__terms.items():
            term = c
            for vi, ei in zip(values, e[1:]):
                if ei:
                    term = f.mul(term, f.pow(vi, ei))
            total = f.add(total, term)
        return Scalar(f, total)

    def specialize_t(self, t0) -> "MultiPoly":
        """
        Replaces t with a scalar, producing a parameter free polynomial

        Args:
            t0: The value of t, a Scalar or an int

        Returns:
            The specialized polynomial over the base field
        """
        f = self.__field
        raw = t0.value() if isinstance(t0, Scalar) else f.from_int(t0)
        terms: Terms = {}
        for e, c in self.__terms.items():
            if e[0] < 0 and f.is_zero(raw):
                msg = f"Cannot set t = 0 in a term with t^{e[0]:d}"
                raise NegativeTPower(msg)
            value = f.mul(c, f.pow(raw, e[0]))
            key = (0,) + e[1:]
            terms[key] = f.add(terms[key], value) if key in terms else value
        base = self.__ring.with_kind(RingKind.NO_PARAM)
        return MultiPoly(base, self.__n, terms)

    def substitute(
        self,
        images: List["MultiPoly"],
        t_image: Optional["MultiPoly"] = None,
        degree_bound: Optional[int] = None,
    ) -> "MultiPoly":
        """
        Substitutes x_i -> images[i-1] and optionally t -> t_image

        Args:
            images: n polynomials over a common ring with the same base field
            t_image: Image of t. If None, t maps to t of the image ring
            degree_bound: If given, terms of x-degree above it are dropped
                from every intermediate product

        Returns:
            The substituted polynomial over the ring of the images
        """
        if len(images) != self.__n:
            msg = f"Substitution needs {self.__n:d} images, got {len(images):d}"
            raise InputError(msg)

        ring = images[0].ring()
        m = images[0].nvars()
        for img in images:
            if img.ring() != ring or img.nvars() != m:
                msg = "Substitution images must share ring and number of variables"
                raise RingMismatch(msg)
        if ring.field() != self.__field:
            msg = f"Cannot substitute {ring.tag():s} polynomials into {self.__ring.tag():s}"
            raise RingMismatch(msg)

        if t_image is None:
            if self.has_t():
                if not ring.has_parameter():
                    msg = f"The images in {ring.tag():s} have no parameter t"
                    raise RingMismatch(msg)
                t_image = MultiPoly.parameter(ring, m)
        elif t_image.ring() != ring or t_image.nvars() != m:
            msg = "The image of t must share the ring of the x images"
            raise RingMismatch(msg)

        powers = [{0: MultiPoly.one(ring, m), 1: img} for img in images]
        t_powers: Dict[int, MultiPoly] = {0: MultiPoly.one(ring, m)}

        def power(cache, base, k):
            if k in cache:
                return cache[k]
            half = power(cache, base, k // 2)
            result = _mul(half, half)
            if k % 2:
                result = _mul(result, base)
            cache[k] = result
            return result

        def _mul(a, b):
            if degree_bound is None:
                return a * b
            return a.mul_truncated(b, degree_bound)

        def t_power(k):
            if k in t_powers:
                return t_powers[k]
            if k > 0:
                return power(t_powers, t_image, k)
            return _inverse_monomial_power(t_image, -k)

        f = self.__field
        result: Terms = {}
        for e, c in self.__terms.items():
            term = MultiPoly.constant(ring, m, c)
            if e[0] != 0:
                term = _mul(term, t_power(e[0]))
            for i in range(self.__n):
                if e[i + 1]:
                    term = _mul(term, power(powers[i], images[i], e[i + 1]))
            for te, tc in term.terms().items():
                result[te] = f.add(result[te], tc) if te in result else tc

        return MultiPoly(ring, m, result)

    # Serialization

    def to_dict(self) -> dict:
        """
        Returns a JSON friendly description with terms in canonical order

        Returns:
            Dictionary with ring, nvars and terms
        """
        return {
            "ring": self.__ring.tag(),
            "nvars": self.__n,
            "terms": [
                {
                    "coefficient": self.__field.format(c),
                    "t": e[0],
                    "x": list(e[1:]),
                }
                for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_dict(data: dict) -> "MultiPoly":
        from ..ring.paramring import parse_ring

        ring = parse_ring(data["ring"])
        n = int(data["nvars"])
        terms = {}
        for term in data["terms"]:
            e = (int(term["t"]), *[int(x) for x in term["x"]])
            terms[e] = ring.field().parse(str(term["coefficient"]))
        return MultiPoly(ring, n, terms)


def _inverse_monomial_power(t_image: MultiPoly, k: int) -> MultiPoly:
    """
    Returns t_image^(-k) when t_image is an invertible monomial c * t^j
    """
    terms = t_image.terms()
    if len(terms) != 1:
        msg = "A negative power of t needs an invertible image of t"
        raise NegativeTPower(msg)
    ((e, c),) = terms.items()
    if any(e[1:]):
        msg = "A negative power of t needs an image of t free of x"
        raise NegativeTPower(msg)
    f = t_image.field()
    exponent = (-k * e[0],) + e[1:]
    return MultiPoly(
        t_image.ring(), t_image.nvars(), {exponent: f.pow(f.inv(c), k)}
    )


def poly_arith(op: str, p: MultiPoly, q: Union[MultiPoly, Scalar, int, None] = None):
    """
    Exact polynomial arithmetic

    Args:
        op: One of add, sub, mul, scalar_mul, neg
        p: The first operand
        q: The second operand, a polynomial or a scalar for scalar_mul

    Returns:
        The result in canonical form
    """
    if op == "neg":
        return -p
    if q is None:
        msg = f"Operation {op:s} requires two operands"
        raise InputError(msg)
    if op == "add":
        return p + q
    elif op == "sub":
        return p - q
    elif op == "mul":
        return p * q
    elif op == "scalar_mul":
        if isinstance(q, MultiPoly):
            msg = "scalar_mul requires a scalar operand"
            raise InputError(msg)
        return p.scalar_mul(q)
    else:
        msg = f"Invalid polynomial operation: {op:s}"
        raise InputError(msg)
