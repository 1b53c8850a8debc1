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
Library wide limits. Each value can be overridden with an environment
variable of the same name, read when the limit is requested.
"""

import logging
import os

from .errors import InputError

log = logging.getLogger(__name__)

DEFAULTS = {
    "AUTMAP_MAX_POINTS": 10**7,
    "AUTMAP_CENSUS_MAX_POINTS": 10**6,
    "AUTMAP_MAX_DETERMINANT_DIM": 6,
    "AUTMAP_MAX_QUOTIENT_FIELD": 256,
    "AUTMAP_TRANSLATION_ENUMERATION_LIMIT": 4096,
}

MAX_FIELD_CARDINALITY = 2**16


def setting(name: str) -> int:
    """
    Returns the integer value of a setting, honoring environment overrides

    Args:
        name: The name of the setting, i.e. AUTMAP_MAX_POINTS

    Returns:
        The value of the setting
    """
    if name not in DEFAULTS:
        msg = f"Unknown setting: {name:s}"
        raise KeyError(msg)

    if name not in os.environ:
        return DEFAULTS[name]

    raw = os.environ[name]
    try:
        value = int(raw)
    except ValueError:
        msg = f"Environment variable {name:s} must be an integer, got '{raw:s}'"
        raise InputError(msg) from None

    if value <= 0:
        msg = f"Environment variable {name:s} must be positive"
        raise InputError(msg)

    log.debug(f"Using {name:s}={value:d} from the environment")
    return value


def max_points() -> int:
    return setting("AUTMAP_MAX_POINTS")


def census_max_points() -> int:
    return setting("AUTMAP_CENSUS_MAX_POINTS")


def max_determinant_dim() -> int:
    return setting("AUTMAP_MAX_DETERMINANT_DIM")


def max_quotient_field() -> int:
    return setting("AUTMAP_MAX_QUOTIENT_FIELD")


def translation_enumeration_limit() -> int:
    return setting("AUTMAP_TRANSLATION_ENUMERATION_LIMIT")
