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

from fractions import Fraction

from .multipoly import MultiPoly


def _monomial(e) -> str:
    factors = []
    if e[0] == 1:
        factors.append("t")
    elif e[0] != 0:
        factors.append(f"t^{e[0]:d}")
    for i, ei in enumerate(e[1:], start=1):
        if ei == 1:
            factors.append(f"x{i:d}")
        elif ei > 1:
            factors.append(f"x{i:d}^{ei:d}")
    return "*".join(factors)


def format_poly(p: MultiPoly) -> str:
    """
    Canonical text form of a polynomial. Terms appear in graded-lex order,
    coefficients in the scalar format of the field, and the output parses
    back to the same polynomial

    Args:
        p: The polynomial

    Returns:
        The text form, "0" for the zero polynomial
    """
    field = p.field()
    one = field.one()
    pieces = []
    for e, c in p.sorted_terms():
        negative = isinstance(c, Fraction) and c < 0
        magnitude = -c if negative else c
        monomial = _monomial(e)
        if not monomial:
            text = field.format(magnitude)
        elif magnitude == one:
            text = monomial
        else:
            text = f"{field.format(magnitude):s}*{monomial:s}"
        pieces.append((negative, text))

    if not pieces:
        return "0"

    negative, text = pieces[0]
    out = "-" + text if negative else text
    for negative, text in pieces[1:]:
        out += (" - " if negative else " + ") + text
    return out
