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
Text front end for polynomials. The grammar is the usual infix one:
variables x1..x9, the parameter t, integer and rational literals, field
literals [c_{r-1},...,c_0], the operators + - * / ^ and parentheses.

Parsing is delegated to sympy after the text has been screened, so the
expression evaluated by sympy only ever contains the whitelisted names.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Tuple

from ..errors import (
    InputError,
    NegativeTPower,
    PolySyntaxError,
    RingMismatch,
    UnknownVariable,
)
from ..ring.paramring import ParamRing, RingKind
from .multipoly import MultiPoly

log = logging.getLogger(__name__)

_ALLOWED = re.compile(r"[0-9A-Za-z+\-*/^()\[\],\s]")
_IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_FIELD_LITERAL = re.compile(r"\[[^\[\]]*\]")
_GENERATOR = "z"


class _Rewrite:
    """
    Records where field literals were replaced so that positions reported
    by sympy can be mapped back onto the original text
    """

    def __init__(self):
        self.__spans: List[Tuple[int, int, int, int]] = []

    def add(self, new_start: int, new_end: int, old_start: int, old_end: int):
        self.__spans.append((new_start, new_end, old_start, old_end))

    def original_position(self, offset: int) -> int:
        shift = 0
        for new_start, new_end, old_start, old_end in self.__spans:
            if offset < new_start:
                break
            if offset < new_end:
                return old_start
            shift = old_end - new_end
        return max(offset + shift, 0)


def _screen(text: str, ring: ParamRing, nvars: int) -> None:
    for i, ch in enumerate(text):
        if not _ALLOWED.match(ch):
            msg = f"Unexpected character '{ch:s}'"
            raise PolySyntaxError(msg, i)

    stripped = _FIELD_LITERAL.sub(lambda m: " " * len(m.group(0)), text)
    for match in _IDENTIFIER.finditer(stripped):
        name = match.group(0)
        if name == "t":
            if not ring.has_parameter():
                msg = f"Parameter t is not available in {ring.tag():s}"
                raise UnknownVariable(msg)
            continue
        if re.fullmatch(r"x[1-9]", name) and int(name[1:]) <= nvars:
            continue
        msg = f"Unknown variable '{name:s}' at position {match.start():d} (ring has x1..x{nvars:d})"
        raise UnknownVariable(msg)


def _replace_field_literals(text: str, ring: ParamRing) -> Tuple[str, _Rewrite]:
    field = ring.field()
    rewrite = _Rewrite()
    out = []
    last = 0
    length = 0
    for match in _FIELD_LITERAL.finditer(text):
        if not field.is_finite():
            msg = "Coefficient lists are not valid over QQ"
            raise PolySyntaxError(msg, match.start())
        try:
            raw = field.parse(match.group(0))
        except InputError as e:
            raise PolySyntaxError(str(e), match.start()) from None

        digits = field.digits(raw)
        r = len(digits)
        summands = [
            f"{c:d}*{_GENERATOR:s}**{r - 1 - k:d}" for k, c in enumerate(digits) if c
        ]
        replacement = "(" + ("+".join(summands) if summands else "0") + ")"

        out.append(text[last : match.start()])
        length += match.start() - last
        rewrite.add(length, length + len(replacement), match.start(), match.end())
        out.append(replacement)
        length += len(replacement)
        last = match.end()
    out.append(text[last:])
    return "".join(out), rewrite


def parse_poly(text: str, ring: ParamRing, nvars: int) -> MultiPoly:
    """
    Parses a polynomial

    Args:
        text: The polynomial text, i.e. "x1*x3 + x2^2"
        ring: The coefficient ring
        nvars: The number of x variables

    Returns:
        The polynomial in canonical form
    """
    from sympy import Add, Expr, Symbol, expand
    from sympy.parsing.sympy_parser import (
        convert_xor,
        parse_expr,
        standard_transformations,
    )
    from tokenize import TokenError

    if not text.strip():
        msg = "Empty polynomial"
        raise PolySyntaxError(msg, 0)

    _screen(text, ring, nvars)
    source, rewrite = _replace_field_literals(text, ring)

    symbols: Dict[str, Symbol] = {f"x{i:d}": Symbol(f"x{i:d}") for i in range(1, 10)}
    symbols["t"] = Symbol("t")
    symbols[_GENERATOR] = Symbol(_GENERATOR)

    try:
        expr = parse_expr(
            source,
            local_dict=dict(symbols),
            transformations=(*standard_transformations, convert_xor),
        )
    except SyntaxError as e:
        offset = (e.offset or 1) - 1
        msg = f"Invalid polynomial syntax: {e.msg!s:s}"
        raise PolySyntaxError(msg, rewrite.original_position(offset)) from None
    except TokenError:
        msg = "Unbalanced parentheses"
        raise PolySyntaxError(msg, len(text)) from None
    except (TypeError, ValueError, ZeroDivisionError) as e:
        msg = f"Invalid polynomial: {e!s:s}"
        raise PolySyntaxError(msg, 0) from None

    if not isinstance(expr, Expr):
        msg = "Expected a single polynomial"
        raise PolySyntaxError(msg, max(text.find(","), 0))

    return _from_expression(expand(expr), Add, symbols, ring, nvars)


def _from_expression(expr, add_class, symbols, ring: ParamRing, nvars: int) -> MultiPoly:
    field = ring.field()
    index = {symbols[f"x{i:d}"]: i for i in range(1, nvars + 1)}
    t_symbol = symbols["t"]
    z_symbol = symbols[_GENERATOR]

    terms = {}
    for term in add_class.make_args(expr):
        coefficient, rest = term.as_coeff_Mul()
        if not coefficient.is_Rational:
            msg = f"Coefficient {coefficient!s:s} is not exact"
            raise PolySyntaxError(msg, 0)

        raw = field.from_fraction(Fraction(int(coefficient.p), int(coefficient.q)))
        exponent = [0] * (nvars + 1)
        for base, power in rest.as_powers_dict().items():
            if base == 1:
                continue
            if not power.is_Integer:
                msg = f"Non integer power {power!s:s} of {base!s:s}"
                raise PolySyntaxError(msg, 0)
            k = int(power)
            if base == z_symbol:
                raw = field.mul(raw, field.pow(field.generator(), k))
            elif base == t_symbol:
                if k < 0 and ring.kind() == RingKind.POLY_T:
                    msg = f"Negative power t^{k:d} in {ring.tag():s}"
                    raise NegativeTPower(msg)
                exponent[0] += k
            elif base in index:
                if k < 0:
                    msg = f"Negative power of {base!s:s} is not a polynomial"
                    raise PolySyntaxError(msg, 0)
                exponent[index[base]] += k
            else:
                msg = f"Expression {base!s:s} is not a polynomial"
                raise PolySyntaxError(msg, 0)

        if field.is_zero(raw):
            continue
        key = tuple(exponent)
        terms[key] = field.add(terms[key], raw) if key in terms else raw

    try:
        return MultiPoly(ring, nvars, terms)
    except RingMismatch as e:
        raise UnknownVariable(str(e)) from None
