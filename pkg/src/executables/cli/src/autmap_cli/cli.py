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

import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from schema import Schema, SchemaError

from .commands import EXIT_INPUT, EXIT_OK, run_document
from .report import to_json, to_table
from .request import COMMANDS

BATCH_SCHEMA = Schema([{"command": str, str: object}])

OPTION_KEYS = (
    "field",
    "seed",
    "grid",
    "stratum",
    "cap",
    "random",
    "dimension",
    "point",
    "target",
    "alpha",
    "beta",
    "u",
)
FLAG_KEYS = ("pipeline", "modulo_linear", "centraliser")


def _parse_samples(text: str) -> List[int]:
    return [int(s) for s in text.split(",") if s.strip()]


def build_parser():
    """
    Builds the argument parser for the autmap command
    """
    import argparse

    from libautmap.version import get_autmap_version

    p = argparse.ArgumentParser(
        prog="autmap",
        description="Exact computations with polynomial automorphisms of affine space",
    )
    p.add_argument(
        "command",
        help="Command to execute",
        choices=[*COMMANDS, "batch", "version"],
    )
    p.add_argument(
        "inputs",
        nargs="*",
        help="Maps written as (p1, ..., pn) [over RING], polynomials in x1, or @file",
    )
    p.add_argument("--field", default="QQ", help="QQ, GF(p) or GF(p^r)")
    p.add_argument("--seed", type=int, help="Seed for commands that draw random input")
    p.add_argument("--grid", type=int, help="Witness grid height, or the rational parameter grid bound")
    p.add_argument(
        "--samples",
        type=_parse_samples,
        help="Comma separated nonzero parameter values for sample checks",
    )
    p.add_argument("--stratum", type=int, help="Stratum bound J for vmember")
    p.add_argument("--cap", type=int, help="Largest number of points to enumerate")
    p.add_argument("--random", type=int, help="Random word length, or number of random identity draws")
    p.add_argument("--dimension", type=int, help="Dimension for census")
    p.add_argument("--point", help="The moved point p for sln-extract, i.e. 0,0")
    p.add_argument("--target", help="The image h(p) for sln-extract, i.e. 1,0")
    p.add_argument("--alpha", help="Nagata parameter alpha")
    p.add_argument("--beta", help="Nagata parameter beta")
    p.add_argument("--u", help="Nagata scaling u")
    p.add_argument("--pipeline", action="store_true", help="Run the commutator pipeline on an automorphism")
    p.add_argument("--modulo-linear", action="store_true", help="Project rho onto k[x]/(V + kx)")
    p.add_argument("--centraliser", action="store_true", help="Run the centraliser check instead of the parity census")
    p.add_argument("--pretty", action="store_true", help="Print a table instead of JSON")
    p.add_argument("--workers", type=int, default=4, help="Concurrent requests in batch mode")
    p.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    p.add_argument(
        "--version",
        action="version",
        version=f"autmap version: {get_autmap_version():s}",
    )
    return p


def request_document(args) -> dict:
    """
    Converts parsed arguments into a request document

    Args:
        args: The argparse namespace

    Returns:
        The request document, validated later by Request
    """
    data = {"command": args.command, "inputs": list(args.inputs)}
    for key in OPTION_KEYS:
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.samples is not None:
        data["samples"] = args.samples
    for key in FLAG_KEYS:
        data[key] = bool(getattr(args, key))
    return data


def run_batch(path: str, workers: int) -> Tuple[object, int]:
    """
    Runs a JSON array of request documents concurrently. Each request gets
    its own report and exit code, in input order

    Args:
        path: The batch file
        workers: Number of worker threads

    Returns:
        Tuple of the combined report and the largest exit code
    """
    log = logging.getLogger(__name__)
    try:
        documents = BATCH_SCHEMA.validate(json.loads(Path(path).read_text()))
    except (OSError, ValueError, SchemaError) as e:
        return {"error": "RequestError", "message": f"Invalid batch file: {e!s:s}"}, EXIT_INPUT

    log.info(f"Running {len(documents):d} requests with {workers:d} workers")
    with ThreadPoolExecutor(max_workers=max(workers, 1)) as executor:
        outcomes = list(executor.map(run_document, documents))

    report = [
        {"index": i, "command": doc["command"], "exit_code": code, "report": result}
        for i, (doc, (result, code)) in enumerate(zip(documents, outcomes))
    ]
    return report, max((code for _, code in outcomes), default=EXIT_OK)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parses the command line, runs the request and prints the report

    Args:
        argv: The arguments, sys.argv[1:] if omitted

    Returns:
        The exit code
    """
    from libautmap.version import get_autmap_version

    args = build_parser().parse_args(argv)

    log_level = logging.INFO
    if args.verbose:
        log_level = logging.DEBUG

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s :: %(levelname)s :: %(filename)s :: %(funcName)s :: %(message)s",
        datefmt="%Y-%m-%dT%H:%M:%S%Z",
        stream=sys.stderr,
    )
    log = logging.getLogger(__name__)
    log.debug(f"Running autmap version {get_autmap_version():s}")

    if args.command == "version":
        report, code = {"version": get_autmap_version()}, EXIT_OK
    elif args.command == "batch":
        if len(args.inputs) != 1:
            report = {"error": "RequestError", "message": "batch expects one file"}
            code = EXIT_INPUT
        else:
            report, code = run_batch(args.inputs[0], args.workers)
    else:
        report, code = run_document(request_document(args))

    print(to_table(report) if args.pretty else to_json(report))
    return code


def run():
    """
    Main entry point for the script
    """
    sys.exit(main())


if __name__ == "__main__":
    run()
