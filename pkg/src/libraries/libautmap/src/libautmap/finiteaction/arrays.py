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
Vectorized arithmetic of a finite field on numpy arrays of raw encodings.
Prime fields reduce modulo p, extension fields multiply through the log
and exp tables of the field and add digit by digit in base p.
"""

import numpy as np

from ..ring.fields import FieldDesc


class FieldArrays:
    """
    Elementwise field operations on int64 arrays holding raw values
    0..q-1
    """

    def __init__(self, field: FieldDesc):
        """
        Constructor for FieldArrays

        Args:
            field: A finite field
        """
        self.__field = field
        self.__q = field.require_finite("Array arithmetic")
        self.__p = field.characteristic()
        self.__r = field.degree()
        if self.__r > 1:
            exp, logs = field.tables()
            self.__exp = np.array(exp, dtype=np.int64)
            self.__log = np.array(logs, dtype=np.int64)
        else:
            self.__exp = None
            self.__log = None

    def field(self) -> FieldDesc:
        return self.__field

    def cardinality(self) -> int:
        return self.__q

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.__p
        if self.__r == 1:
            return (a + b) % p
        if p == 2:
            return np.bitwise_xor(a, b)
        result = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.__r):
            digit = ((a // place) % p + (b // place) % p) % p
            result += digit * place
            place *= p
        return result

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.__r == 1:
            return (a * b) % self.__p
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        nonzero = (a != 0) & (b != 0)
        result = np.zeros(a.shape, dtype=np.int64)
        index = (self.__log[a[nonzero]] + self.__log[b[nonzero]]) % (self.__q - 1)
        result[nonzero] = self.__exp[index]
        return result

    def pow(self, a: np.ndarray, k: int) -> np.ndarray:
        """
        Elementwise a^k for k >= 0, with 0^0 = 1

        Args:
            a: Array of raw values
            k: The exponent

        Returns:
            The powers
        """
        if k == 0:
            return np.ones_like(a)
        if self.__r > 1:
            nonzero = a != 0
            result = np.zeros_like(a)
            result[nonzero] = self.__exp[(self.__log[a[nonzero]] * (k % (self.__q - 1))) % (self.__q - 1)]
            return result
        result = np.ones_like(a)
        base = a % self.__p
        while k:
            if k & 1:
                result = (result * base) % self.__p
            base = (base * base) % self.__p
            k >>= 1
        return result
