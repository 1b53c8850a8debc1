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
Exception hierarchy for libautmap.

Errors are split by what they mean to a caller: an ``InputError`` is raised
when the request itself is malformed or outside the domain of an operation,
a ``NegativeResult`` is a well-defined mathematical "no" (for instance an
endomorphism that is not an automorphism), and an ``InvariantViolation``
signals that an internal guarantee did not hold.
"""


class AutMapError(Exception):
    """Base class for all errors raised by libautmap"""


class InputError(AutMapError, ValueError):
    """The input is malformed or outside the domain of the operation"""


class NegativeResult(AutMapError):
    """The computation finished with a mathematically negative verdict"""


class InvariantViolation(AutMapError, RuntimeError):
    """An internal invariant failed, this always indicates a bug"""


# ring-core


class NotPrime(InputError):
    pass


class CardinalityTooLarge(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class FieldNotInfinite(InputError):
    pass


class FieldTooLarge(InputError):
    pass


# poly


class RingMismatch(InputError):
    pass


class NegativeTPower(InputError):
    pass


class UnknownVariable(InputError):
    pass


class PolySyntaxError(InputError):
    """
    Parse failure carrying the character offset of the problem
    """

    def __init__(self, message: str, position: int):
        """
        Constructor for PolySyntaxError

        Args:
            message: Description of the problem
            position: Zero based offset into the parsed text
        """
        super().__init__(f"{message} (at position {position:d})")
        self.__position = position

    def position(self) -> int:
        """
        Returns the zero based offset of the error in the parsed text

        Returns:
            The offset
        """
        return self.__position


# endo


class DimensionMismatch(InputError):
    pass


# tame


class SingularMatrix(InputError):
    pass


class ZeroDiagonal(InputError):
    pass


class JacobianNotUnit(NegativeResult):
    pass


class NotInvertible(NegativeResult):
    pass


class NotAutomorphism(NegativeResult):
    pass


class JacobianNotOne(InputError):
    pass


# degeneration


class IdentityInput(InputError):
    pass


class NotIdAtZero(InputError):
    pass


class NoWitness(InvariantViolation):
    pass


class IsTranslation(InputError):
    pass


class DoesNotFixOrigin(InputError):
    pass


class FixedPointMissing(InputError):
    pass


class DegenerateGeometry(InputError):
    pass


# identities


class VariableLeak(InputError):
    pass


class FieldTooSmall(InputError):
    pass


class WrongCharacteristic(InputError):
    pass


class ZeroScalar(InputError):
    pass


# finite-action and quotient


class TooManyPoints(InputError):
    pass


class NotSAut(NegativeResult):
    pass
