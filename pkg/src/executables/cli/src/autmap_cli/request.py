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
from pathlib import Path
from typing import List

import numpy as np
from libautmap.endo.endo import Endo, parse_endo
from libautmap.errors import InputError, PolySyntaxError
from libautmap.poly.multipoly import MultiPoly
from libautmap.poly.parser import parse_poly
from libautmap.ring.fields import FieldDesc, parse_field
from libautmap.ring.paramring import ParamRing, RingKind
from libautmap.ring.scalar import Scalar, parse_scalar
from schema import And, Optional, Or, Schema, SchemaError, Use

log = logging.getLogger(__name__)

COMMANDS = (
    "compose",
    "invert",
    "jacobian",
    "decompose",
    "degenerate",
    "alexander",
    "sln-extract",
    "sign",
    "census",
    "rho",
    "vmember",
    "verify-identities",
    "nagata",
)


class RequestError(InputError):
    """The request document does not validate"""


class InputSyntaxError(InputError):
    """
    A polynomial input failed to parse, located by line and column
    """

    def __init__(self, message: str, text: str, position: int):
        """
        Constructor for InputSyntaxError

        Args:
            message: Description of the problem
            text: The text that failed to parse
            position: Zero based offset of the problem in the text
        """
        position = max(0, min(position, len(text)))
        self.__line = text.count("\n", 0, position) + 1
        self.__column = position - (text.rfind("\n", 0, position) + 1) + 1
        super().__init__(f"{message} (line {self.__line:d}, column {self.__column:d})")

    def line(self) -> int:
        return self.__line

    def column(self) -> int:
        return self.__column


def _located(error: PolySyntaxError, text: str) -> InputSyntaxError:
    message = str(error).rsplit(" (at position", 1)[0]
    return InputSyntaxError(message, text, error.position())


def read_input(text: str) -> str:
    """
    Resolves an input: "@path" is replaced by the contents of the file

    Args:
        text: An inline expression or @path

    Returns:
        The expression text
    """
    if text.startswith("@"):
        return Path(text[1:]).read_text().strip()
    return text


def _is_field(text: str) -> bool:
    parse_field(text)
    return True


def _is_scalar_list(text: str) -> bool:
    return len(split_list(text)) > 0


def split_list(text: str) -> List[str]:
    """
    Splits a comma separated list, keeping bracketed GF(p^r) coefficient
    lists together

    Args:
        text: i.e. "1,2" or "[1,0],[0,1]"

    Returns:
        The items
    """
    items = []
    depth = 0
    current = ""
    for c in text:
        if c == "[":
            depth += 1
        elif c == "]":
            depth -= 1
        if c == "," and depth == 0:
            items.append(current.strip())
            current = ""
        else:
            current += c
    if current.strip():
        items.append(current.strip())
    return items


class Request:
    """
    One validated command: the subcommand, its inputs and options
    """

    REQUEST_SCHEMA = Schema(
        {
            "command": Or(*COMMANDS),
            Optional("inputs", default=[]): [And(str, Use(read_input))],
            Optional("field", default="QQ"): And(str, _is_field),
            Optional("seed"): And(Use(int), lambda n: n >= 0),
            Optional("grid"): And(Use(int), lambda n: n >= 0),
            Optional("samples", default=[1, 2]): [
                And(Use(int), lambda n: n != 0)
            ],
            Optional("stratum"): And(Use(int), lambda n: n >= 0),
            Optional("cap"): And(Use(int), lambda n: n > 0),
            Optional("random"): And(Use(int), lambda n: n > 0),
            Optional("dimension", default=2): And(Use(int), lambda n: n >= 1),
            Optional("point"): And(str, _is_scalar_list),
            Optional("target"): And(str, _is_scalar_list),
            Optional("alpha", default="1"): str,
            Optional("beta", default="2"): str,
            Optional("u", default="2"): str,
            Optional("pipeline", default=False): bool,
            Optional("modulo_linear", default=False): bool,
            Optional("centraliser", default=False): bool,
        }
    )

    def __init__(self, data: dict):
        """
        Constructor for Request

        Args:
            data: The request document, as produced by the argument parser
                or read from a batch file
        """
        try:
            self.__data = Request.REQUEST_SCHEMA.validate(data)
        except SchemaError as e:
            msg = f"Invalid request: {e!s:s}"
            raise RequestError(msg) from None
        self.__field = parse_field(self.__data["field"])
        log.debug(f"Validated request for '{self.command():s}'")

    def command(self) -> str:
        return self.__data["command"]

    def inputs(self) -> List[str]:
        return self.__data["inputs"]

    def field(self) -> FieldDesc:
        return self.__field

    def option(self, name: str):
        return self.__data.get(name)

    def samples(self) -> List[int]:
        return self.__data["samples"]

    def rng(self) -> np.random.Generator:
        """
        Returns the seeded generator for randomized commands

        Returns:
            numpy.random.default_rng(seed)
        """
        seed = self.__data.get("seed")
        if seed is None:
            msg = f"Command '{self.command():s}' draws random input and needs --seed"
            raise RequestError(msg)
        return np.random.default_rng(seed)

    def require_inputs(self, count: int) -> List[str]:
        inputs = self.inputs()
        if len(inputs) < count:
            msg = f"Command '{self.command():s}' expects {count:d} input(s), got {len(inputs):d}"
            raise RequestError(msg)
        return inputs

    def endo(self, index: int = 0, kind: RingKind = RingKind.NO_PARAM) -> Endo:
        """
        Parses one input as a map, over the request field unless the text
        names its own ring

        Args:
            index: Which input
            kind: Parameter ring used when the text names no ring

        Returns:
            The map
        """
        text = self.require_inputs(index + 1)[index]
        try:
            return parse_endo(text, ParamRing(self.__field, kind))
        except PolySyntaxError as e:
            raise _located(e, text) from None

    def poly(self, index: int = 0) -> MultiPoly:
        """
        Parses one input as a polynomial in x1 over the request field

        Args:
            index: Which input

        Returns:
            The polynomial
        """
        text = self.require_inputs(index + 1)[index]
        try:
            return parse_poly(text, ParamRing(self.__field), 1)
        except PolySyntaxError as e:
            raise _located(e, text) from None

    def scalars(self, name: str) -> List[Scalar]:
        return [parse_scalar(s, self.__field) for s in split_list(self.__data[name])]

    def scalar(self, name: str) -> Scalar:
        return parse_scalar(self.__data[name], self.__field)

    def to_dict(self) -> dict:
        return dict(self.__data)
