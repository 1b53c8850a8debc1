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
Dense polynomials over a prime field, stored as coefficient lists with the
constant term first. These helpers only serve the construction of extension
fields (irreducibility tests and residue multiplication), all other
polynomial arithmetic lives in libautmap.poly.
"""

from typing import List, Tuple

Poly = List[int]


def trim(a: Poly) -> Poly:
    """
    Removes trailing zero coefficients

    Args:
        a: The coefficient list

    Returns:
        The same list without trailing zeros
    """
    while a and a[-1] == 0:
        a.pop()
    return a


def from_int(a: int, p: int) -> Poly:
    """
    Decodes the base p digits of an integer into a coefficient list

    Args:
        a: The encoded polynomial
        p: The characteristic

    Returns:
        The coefficient list, constant term first
    """
    c = []
    while a:
        a, r = divmod(a, p)
        c.append(r)
    return c


def to_int(a: Poly, p: int) -> int:
    """
    Encodes a coefficient list as the integer with base p digits a

    Args:
        a: The coefficient list
        p: The characteristic

    Returns:
        The encoded polynomial
    """
    s = 0
    for ai in reversed(a):
        s = s * p + ai
    return s


def sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    c = [
        ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
        for i in range(n)
    ]
    return trim(c)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            c[i + j] = (c[i + j] + ai * bj) % p
    return trim(c)


def divmod_poly(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    """
    Euclidean division over GF(p)

    Args:
        a: The dividend
        b: The divisor, must be nonzero
        p: The characteristic

    Returns:
        The quotient and the remainder
    """
    if not b:
        msg = "Polynomial division by zero"
        raise ZeroDivisionError(msg)

    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead_inv = pow(b[-1], -1, p)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = (r[-1] * lead_inv) % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        trim(r)
    return trim(q), r


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_poly(a, b, p)[1]


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    if a:
        lead_inv = pow(a[-1], -1, p)
        a = [(c * lead_inv) % p for c in a]
    return a


def powmod(a: Poly, n: int, modulus: Poly, p: int) -> Poly:
    result = [1]
    base = mod(a, modulus, p)
    while n:
        if n & 1:
            result = mod(mul(result, base, p), modulus, p)
        base = mod(mul(base, base, p), modulus, p)
        n >>= 1
    return result


def is_irreducible(a: Poly, p: int) -> bool:
    """
    Irreducibility test: a of degree r is irreducible iff
    gcd(X^(p^i) - X, a) = 1 for every i <= r/2

    Args:
        a: The polynomial to test
        p: The characteristic

    Returns:
        True if a is irreducible over GF(p)
    """
    degree = len(a) - 1
    if degree <= 0:
        return False

    b = [0, 1]
    for _ in range(degree // 2):
        b = powmod(b, p, a, p)
        if gcd(sub(b, [0, 1], p), a, p) != [1]:
            return False
    return True


def lowest_irreducible(r: int, p: int) -> Poly:
    """
    Returns the monic irreducible polynomial of degree r whose lower
    coefficients (c_{r-1}, ..., c_0) are lexicographically smallest

    Args:
        r: The degree
        p: The characteristic

    Returns:
        The coefficient list of the modulus
    """
    for lower in range(p**r):
        candidate = from_int(lower, p)
        candidate += [0] * (r - len(candidate))
        candidate.append(1)
        if is_irreducible(candidate, p):
            return candidate

    msg = f"No irreducible polynomial of degree {r:d} over GF({p:d})"
    raise RuntimeError(msg)
