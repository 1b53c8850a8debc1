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
from typing import List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch, InputError, RingMismatch
from ..poly.multipoly import MultiPoly
from ..ring.fields import FieldDesc
from ..ring.paramring import ParamRing, RingKind
from ..ring.scalar import Scalar
from .matrix import PolyMatrix, poly_determinant, poly_mat_mul

log = logging.getLogger(__name__)


class Endo:
    """
    A polynomial endomorphism f = (f1, ..., fn) of affine n-space over a
    parameter ring. Composition follows the convention f.compose(g) = f o g,
    that is g is applied first and substituted into f
    """

    def __init__(self, components: Sequence[MultiPoly]):
        """
        Constructor for Endo

        Args:
            components: The n coordinate polynomials, each in n variables
        """
        components = list(components)
        if not components:
            msg = "An endomorphism needs at least one component"
            raise DimensionMismatch(msg)

        n = len(components)
        ring = components[0].ring()
        for c in components:
            if c.nvars() != n:
                msg = f"Component in {c.nvars():d} variables for a map of A^{n:d}"
                raise DimensionMismatch(msg)
            if c.ring() != ring:
                msg = f"Components over {c.ring().tag():s} and {ring.tag():s}"
                raise RingMismatch(msg)

        self.__components = tuple(components)
        self.__ring = ring
        self.__n = n

    @staticmethod
    def identity(ring: ParamRing, n: int) -> "Endo":
        return Endo([MultiPoly.variable(ring, n, i) for i in range(1, n + 1)])

    def ring(self) -> ParamRing:
        return self.__ring

    def field(self) -> FieldDesc:
        return self.__ring.field()

    def dimension(self) -> int:
        return self.__n

    def components(self) -> Tuple[MultiPoly, ...]:
        return self.__components

    def component(self, i: int) -> MultiPoly:
        """
        Returns f_i

        Args:
            i: The component index, starting at 1

        Returns:
            The coordinate polynomial
        """
        return self.__components[i - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endo):
            return NotImplemented
        return self.__components == other.components()

    def __hash__(self) -> int:
        return hash(self.__components)

    def __repr__(self) -> str:
        return f"Endo({format_endo(self):s})"

    def __str__(self) -> str:
        return format_endo(self)

    def __check_composable(self, other: "Endo") -> None:
        if other.dimension() != self.__n:
            msg = f"Cannot compose maps of A^{self.__n:d} and A^{other.dimension():d}"
            raise DimensionMismatch(msg)
        if other.ring() != self.__ring:
            msg = f"Cannot compose maps over {self.__ring.tag():s} and {other.ring().tag():s}"
            raise RingMismatch(msg)

    def compose(self, g: "Endo", degree_bound: Optional[int] = None) -> "Endo":
        """
        Returns self o g, i.e. (f_i(g_1, ..., g_n))_i

        Args:
            g: The map applied first
            degree_bound: Drop terms of x-degree above this bound

        Returns:
            The composition
        """
        self.__check_composable(g)
        images = list(g.components())
        return Endo([c.substitute(images, degree_bound=degree_bound) for c in self.__components])

    def __matmul__(self, g: "Endo") -> "Endo":
        return self.compose(g)

    def degree(self) -> int:
        return max(c.x_degree() for c in self.__components)

    def with_ring(self, ring: ParamRing) -> "Endo":
        return Endo([c.with_ring(ring) for c in self.__components])

    def truncate(self, degree_bound: int) -> "Endo":
        return Endo([c.truncate(degree_bound) for c in self.__components])

    def homogeneous_part(self, m: int) -> "Endo":
        return Endo([c.homogeneous_part(m) for c in self.__components])

    def is_identity(self) -> bool:
        return self == Endo.identity(self.__ring, self.__n)

    def is_translation(self) -> bool:
        """
        Returns True if every component is x_i + c_i with c_i constant in x.
        Over a parameter ring the constants may depend on t

        Returns:
            True for translations, including the identity
        """
        for i, c in enumerate(self.__components, start=1):
            rest = c - MultiPoly.variable(self.__ring, self.__n, i)
            if rest.x_degree() > 0:
                return False
        return True

    def translation_part(self) -> List[MultiPoly]:
        """
        Returns f(0), the constant terms of the components as polynomials
        free of x (they may involve t)

        Returns:
            The list of constant parts
        """
        return [c.homogeneous_part(0) for c in self.__components]

    def fixes_origin(self) -> bool:
        return all(p.is_zero() for p in self.translation_part())

    def has_t(self) -> bool:
        return any(c.has_t() for c in self.__components)

    def derivative(self) -> "DerivMatrix":
        return DerivMatrix(
            [
                [c.partial_derivative(j) for j in range(1, self.__n + 1)]
                for c in self.__components
            ]
        )

    def jacobian(self) -> MultiPoly:
        return self.derivative().determinant()

    def jacobian_unit(self) -> Optional[Scalar]:
        """
        Returns the Jacobian when it is a unit of the coefficient ring: a
        nonzero constant over k and k[t], or a nonzero c*t^j over k[t,1/t]

        Returns:
            The scalar c, or None if the Jacobian is not a unit
        """
        jac = self.jacobian()
        if jac.num_terms() != 1:
            return None
        ((e, c),) = jac.terms().items()
        if any(e[1:]):
            return None
        if e[0] != 0 and self.__ring.kind() != RingKind.LAURENT_T:
            return None
        return Scalar(self.field(), c)

    def specialize_t(self, t0) -> "Endo":
        return Endo([c.specialize_t(t0) for c in self.__components])

    def substitute_t(self, t_image: MultiPoly) -> "Endo":
        """
        Replaces the parameter t by t_image, keeping every x_i

        Args:
            t_image: The image of t, over the ring of the result

        Returns:
            The reparametrized map
        """
        ring = t_image.ring()
        images = [MultiPoly.variable(ring, self.__n, i) for i in range(1, self.__n + 1)]
        return Endo([c.substitute(images, t_image=t_image) for c in self.__components])

    def evaluate(self, point: Sequence) -> List[Scalar]:
        return [c.evaluate(point) for c in self.__components]

    def linear_coefficients(self) -> Tuple[List[List[MultiPoly]], List[MultiPoly]]:
        """
        Returns the matrix (Df)(0) and the vector f(0) with entries in the
        coefficient ring, as x-free polynomials

        Returns:
            Tuple of the matrix and the translation vector
        """
        matrix = []
        for c in self.__components:
            linear = c.homogeneous_part(1)
            row = []
            for j in range(1, self.__n + 1):
                row.append(linear.partial_derivative(j))
            matrix.append(row)
        return matrix, self.translation_part()

    def linear_part(self) -> Tuple[List[List[Scalar]], List[Scalar]]:
        """
        Returns ((Df)(0), f(0)) as scalars. Requires the degree one
        truncation of the map to be free of t

        Returns:
            Tuple of the matrix and the translation vector
        """
        matrix, vector = self.linear_coefficients()
        field = self.field()

        def to_scalar(p: MultiPoly) -> Scalar:
            if p.has_t():
                msg = "The linear part depends on t"
                raise RingMismatch(msg)
            return Scalar(field, p.constant_term())

        return (
            [[to_scalar(p) for p in row] for row in matrix],
            [to_scalar(p) for p in vector],
        )

    def to_dict(self) -> dict:
        return {
            "ring": self.__ring.tag(),
            "dimension": self.__n,
            "components": [str(c) for c in self.__components],
        }


class DerivMatrix:
    """
    The matrix Df = (df_i/dx_j) of an endomorphism
    """

    def __init__(self, entries: PolyMatrix):
        self.__entries = [list(row) for row in entries]
        self.__n = len(entries)

    def entries(self) -> PolyMatrix:
        return self.__entries

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.__entries[i - 1][j - 1]

    def dimension(self) -> int:
        return self.__n

    def determinant(self) -> MultiPoly:
        return poly_determinant(self.__entries)

    def at(self, point: Sequence) -> List[List[Scalar]]:
        """
        Evaluates the matrix at a point of k^n

        Args:
            point: The point, as Scalars or ints

        Returns:
            The matrix of scalars
        """
        return [[e.evaluate(point) for e in row] for row in self.__entries]

    def pullback(self, g: Endo) -> "DerivMatrix":
        """
        Returns g^*(Df), every entry with x_i replaced by g_i

        Args:
            g: The map substituted into the entries

        Returns:
            The substituted matrix
        """
        images = list(g.components())
        return DerivMatrix([[e.substitute(images) for e in row] for row in self.__entries])

    def __matmul__(self, other: "DerivMatrix") -> "DerivMatrix":
        return DerivMatrix(poly_mat_mul(self.__entries, other.entries()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DerivMatrix):
            return NotImplemented
        return self.__entries == other.entries()

    def __hash__(self) -> int:
        return hash(tuple(tuple(row) for row in self.__entries))


def compose(f: Endo, g: Endo) -> Endo:
    return f.compose(g)


def jacobian(f: Endo) -> MultiPoly:
    return f.jacobian()


def derivative(f: Endo) -> DerivMatrix:
    return f.derivative()


def chain_rule_check(f: Endo, g: Endo) -> bool:
    """
    Checks D(f o g) = g^*(Df) . Dg entrywise

    Args:
        f: The outer map
        g: The inner map

    Returns:
        True if the identity holds exactly
    """
    left = f.compose(g).derivative()
    right = f.derivative().pullback(g) @ g.derivative()
    return left == right


def specialize_t(f: Endo, t0) -> Endo:
    return f.specialize_t(t0)


def linear_part(f: Endo) -> Tuple[List[List[Scalar]], List[Scalar]]:
    return f.linear_part()


def degree(f: Endo) -> int:
    return f.degree()


def is_translation(f: Endo) -> bool:
    return f.is_translation()


def is_identity(f: Endo) -> bool:
    return f.is_identity()


def translation_part(f: Endo) -> List[MultiPoly]:
    return f.translation_part()


def jacobian_unit(f: Endo) -> Optional[Scalar]:
    return f.jacobian_unit()


def _split_components(body: str, offset: int) -> List[Tuple[str, int]]:
    from ..errors import PolySyntaxError

    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                msg = "Unbalanced parentheses"
                raise PolySyntaxError(msg, offset + i)
        elif ch == "," and depth == 0:
            parts.append((body[start:i], offset + start))
            start = i + 1
    if depth != 0:
        msg = "Unbalanced parentheses"
        raise PolySyntaxError(msg, offset + len(body))
    parts.append((body[start:], offset + start))
    return parts


def parse_endo(text: str, ring: Optional[ParamRing] = None) -> Endo:
    """
    Parses an endomorphism written as "(p1, ..., pn) over RING". When the
    ring is omitted from the text the ring argument is used, or QQ

    Args:
        text: The text form
        ring: Ring used when the text does not name one

    Returns:
        The endomorphism
    """
    from ..errors import PolySyntaxError
    from ..poly.parser import parse_poly
    from ..ring.fields import field_make
    from ..ring.paramring import parse_ring

    body = text.strip()
    if " over " in body:
        body, ring_text = body.rsplit(" over ", 1)
        ring = parse_ring(ring_text)
        body = body.strip()
    elif ring is None:
        ring = ParamRing(field_make(0, 1))

    if not (body.startswith("(") and body.endswith(")")):
        msg = "An endomorphism is written as (p1, ..., pn)"
        raise PolySyntaxError(msg, 0)

    offset = text.find("(") + 1
    parts = _split_components(body[1:-1], offset)
    n = len(parts)
    components = []
    for part, start in parts:
        try:
            components.append(parse_poly(part, ring, n))
        except PolySyntaxError as e:
            raise PolySyntaxError(str(e).rsplit(" (at position", 1)[0], start + e.position()) from None
    return Endo(components)


def format_endo(f: Endo) -> str:
    body = ", ".join(str(c) for c in f.components())
    return f"({body:s}) over {f.ring().tag():s}"


def endo_from_dict(data: dict) -> Endo:
    from ..ring.paramring import parse_ring

    ring = parse_ring(data["ring"])
    components = ", ".join(data["components"])
    endo = parse_endo(f"({components:s})", ring)
    if endo.dimension() != int(data["dimension"]):
        msg = "Dimension does not match the number of components"
        raise InputError(msg)
    return endo
