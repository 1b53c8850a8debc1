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
One handler per subcommand. A handler takes a validated Request and
returns the report and the exit code: 0 when the verdict is positive, 1 for
a mathematically negative verdict.
"""

import logging
from functools import reduce
from typing import Callable, Dict, Tuple

from libautmap.errors import (
    AutMapError,
    InputError,
    InvariantViolation,
    NegativeResult,
)
from libautmap.ring.paramring import RingKind

from .request import InputSyntaxError, Request

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

Outcome = Tuple[object, int]

RANDOM_DEGREE = 3


def _verdict(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_NEGATIVE


def compose_command(request: Request) -> Outcome:
    inputs = request.require_inputs(2)
    maps = [request.endo(i) for i in range(len(inputs))]
    result = reduce(lambda f, g: f.compose(g), maps)
    return {
        "maps": [str(f) for f in maps],
        "composition": str(result),
        "degree": result.degree(),
        "jacobian": str(result.jacobian()),
    }, EXIT_OK


def invert_command(request: Request) -> Outcome:
    from libautmap.tame.inverse import formal_inverse

    f = request.endo()
    g = formal_inverse(f)
    roundtrip = f.compose(g).is_identity() and g.compose(f).is_identity()
    if not roundtrip:
        msg = "Inverse does not compose to the identity"
        log.error(msg)
        raise InvariantViolation(msg)
    return {
        "input": str(f),
        "inverse": str(g),
        "degree": f.degree(),
        "inverse_degree": g.degree(),
        "roundtrip": roundtrip,
    }, EXIT_OK


def jacobian_command(request: Request) -> Outcome:
    f = request.endo()
    unit = f.jacobian_unit()
    return {
        "input": str(f),
        "jacobian": str(f.jacobian()),
        "unit": None if unit is None else str(unit),
    }, EXIT_OK


def decompose_command(request: Request) -> Outcome:
    from libautmap.tame.jvdk import jvdk_decompose
    from libautmap.tame.randomword import random_word

    length = request.option("random")
    if length is not None:
        f = random_word(request.field(), 2, length, RANDOM_DEGREE, request.rng()).evaluate()
        log.info(f"Decomposing the random plane automorphism {f!s:s}")
    else:
        f = request.endo()
    word = jvdk_decompose(f)
    return {
        "input": str(f),
        "word": word.to_dict(),
        "length": len(word),
        "verified": word.verify(f),
    }, EXIT_OK


def degenerate_command(request: Request) -> Outcome:
    from libautmap.degeneration import commutator_pipeline, degenerate, find_witness

    height = request.option("grid")
    if request.option("pipeline"):
        cert = commutator_pipeline(request.endo(), request.samples(), height)
    else:
        g = request.endo(0, RingKind.POLY_T)
        cert = degenerate(g, find_witness(g, height), request.samples())
    return cert.to_dict(), _verdict(cert.verified() and cert.nontrivial())


def alexander_command(request: Request) -> Outcome:
    from libautmap.degeneration import alexander_family

    f = request.endo()
    family = alexander_family(f)
    matrix, _ = family.specialize_t(0).linear_part()
    return {
        "input": str(f),
        "family": str(family),
        "limit": str(family.specialize_t(0)),
        "limit_matrix": [[str(x) for x in row] for row in matrix],
        "recovers_input": family.specialize_t(1) == f,
    }, EXIT_OK


def sln_extract_command(request: Request) -> Outcome:
    from libautmap.degeneration import sln_extraction

    if request.option("point") is None or request.option("target") is None:
        msg = "sln-extract needs --point and --target"
        raise InputError(msg)
    result = sln_extraction(
        request.endo(), request.scalars("point"), request.scalars("target"), request.samples()
    )
    return result.to_dict(), _verdict(result.is_elementary())


def sign_command(request: Request) -> Outcome:
    from libautmap.finiteaction import permutation_of

    rep = permutation_of(request.endo(), request.option("cap"))
    report = rep.to_dict()
    if rep.bijective():
        report["order"] = rep.order()
    return report, _verdict(rep.bijective())


def census_command(request: Request) -> Outcome:
    from libautmap.finiteaction import centraliser_counterexample, even_action_census

    field = request.field()
    if request.option("centraliser"):
        report = centraliser_counterexample(field, request.option("cap"))
        return report, _verdict(report["verified"])
    report = even_action_census(field, request.option("dimension"), request.option("cap"))
    if not report["consistent"]:
        msg = "Parity census contradicts the expected dichotomy"
        raise InvariantViolation(msg)
    return report, EXIT_OK


def rho_command(request: Request) -> Outcome:
    from libautmap.quotient import rho

    f = request.endo()
    result = rho(f, request.option("modulo_linear"))
    report = result.to_dict()
    report["input"] = str(f)
    return report, EXIT_OK


def vmember_command(request: Request) -> Outcome:
    from libautmap.quotient import v_membership

    result = v_membership(request.poly(), request.option("stratum"))
    return result.to_dict(), _verdict(result.member())


def verify_identities_command(request: Request) -> Outcome:
    from libautmap.identities import grid_suite, random_suite

    count = request.option("random")
    if count is not None:
        reports = random_suite(request.field(), count, request.rng())
    else:
        height = request.option("grid")
        reports = grid_suite(request.field(), 1 if height is None else height)
    return [r.to_dict() for r in reports], _verdict(all(r.verdict() for r in reports))


def nagata_command(request: Request) -> Outcome:
    from libautmap.identities import nagata_suite

    reports = nagata_suite(
        request.scalar("alpha"), request.scalar("beta"), request.scalar("u"), request.field()
    )
    return [r.to_dict() for r in reports], _verdict(all(r.verdict() for r in reports))


HANDLERS: Dict[str, Callable[[Request], Outcome]] = {
    "compose": compose_command,
    "invert": invert_command,
    "jacobian": jacobian_command,
    "decompose": decompose_command,
    "degenerate": degenerate_command,
    "alexander": alexander_command,
    "sln-extract": sln_extract_command,
    "sign": sign_command,
    "census": census_command,
    "rho": rho_command,
    "vmember": vmember_command,
    "verify-identities": verify_identities_command,
    "nagata": nagata_command,
}


def exit_code(error: AutMapError) -> int:
    if isinstance(error, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(error, NegativeResult):
        return EXIT_NEGATIVE
    return EXIT_INPUT


def error_report(error: AutMapError) -> dict:
    report = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, InputSyntaxError):
        report["line"] = error.line()
        report["column"] = error.column()
    return report


def run_request(request: Request) -> Outcome:
    """
    Runs one request, turning library errors into an error report

    Args:
        request: The validated request

    Returns:
        Tuple of the report and the exit code
    """
    log.info(f"Running '{request.command():s}' over {request.field().tag():s}")
    try:
        return HANDLERS[request.command()](request)
    except AutMapError as e:
        code = exit_code(e)
        if code == EXIT_INVARIANT:
            log.error(f"Invariant violation: {e!s:s}")
        else:
            log.warning(f"{type(e).__name__:s}: {e!s:s}")
        return error_report(e), code


def run_document(data: dict) -> Outcome:
    """
    Validates a request document and runs it

    Args:
        data: The request document

    Returns:
        Tuple of the report and the exit code
    """
    try:
        request = Request(data)
    except AutMapError as e:
        return error_report(e), exit_code(e)
    return run_request(request)
