import json
from pathlib import Path

import pytest
from autmap_cli.cli import main
from autmap_cli.commands import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, exit_code
from autmap_cli.report import to_table
from autmap_cli.request import InputSyntaxError, Request, split_list
from libautmap.errors import InvariantViolation, NotSAut, ZeroScalar

GOLDEN = sorted((Path(__file__).parent / "golden").glob("*.json"))


def run_cli(capsys, argv):
    code = main(argv)
    return json.loads(capsys.readouterr().out), code


@pytest.mark.parametrize("path", GOLDEN, ids=[p.stem for p in GOLDEN])
def test_golden(capsys, path):
    case = json.loads(path.read_text())
    report, code = run_cli(capsys, case["argv"])
    assert code == case["exit_code"]
    for key, value in case.get("expect", {}).items():
        assert report[key] == value, key
    if "expect_all" in case:
        assert report
        for entry in report:
            for key, value in case["expect_all"].items():
                assert entry[key] == value, entry


def test_output_is_deterministic(capsys):
    argv = ["verify-identities", "--random", "2", "--seed", "3", "--field", "GF(9)"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_random_commands_need_a_seed(capsys):
    report, code = run_cli(capsys, ["decompose", "--random", "2"])
    assert code == EXIT_INPUT
    assert report["error"] == "RequestError"


def test_syntax_error_is_located(capsys):
    report, code = run_cli(capsys, ["invert", "(x1 & x2, x2)"])
    assert code == EXIT_INPUT
    assert report["error"] == "InputSyntaxError"
    assert (report["line"], report["column"]) == (1, 5)


def test_input_from_file(capsys, tmp_path):
    path = tmp_path / "map.txt"
    path.write_text("(x1 + x2^2, x2)\n")
    report, code = run_cli(capsys, ["invert", f"@{path!s:s}"])
    assert code == EXIT_OK
    assert report["inverse"] == "(-x2^2 + x1, x2) over QQ"

    path.write_text("(x1 + x2,\n x2 $ 1)")
    report, code = run_cli(capsys, ["invert", f"@{path!s:s}"])
    assert code == EXIT_INPUT
    assert (report["line"], report["column"]) == (2, 5)


def test_unknown_field(capsys):
    report, code = run_cli(capsys, ["jacobian", "(x1, x2)", "--field", "GF(6)"])
    assert code == EXIT_INPUT
    assert report["error"] == "RequestError"


def test_missing_inputs(capsys):
    report, code = run_cli(capsys, ["compose", "(x1, x2)"])
    assert code == EXIT_INPUT
    assert "expects 2 input(s)" in report["message"]


def test_sln_extract_needs_points(capsys):
    report, code = run_cli(capsys, ["sln-extract", "(x1 + 1, x2)"])
    assert code == EXIT_INPUT
    assert report["error"] == "InputError"


def test_pretty_output(capsys):
    assert main(["jacobian", "(x1 + x2^2, x2)", "--pretty"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "unit" in out
    assert "+--" in out


def test_version(capsys):
    report, code = run_cli(capsys, ["version"])
    assert code == EXIT_OK
    assert report["version"]


def test_batch(capsys, tmp_path):
    path = tmp_path / "batch.json"
    path.write_text(
        json.dumps(
            [
                {"command": "invert", "inputs": ["(x1 + x2^2, x2)"]},
                {"command": "sign", "inputs": ["(x1 + x2, x2)"], "field": "GF(2)"},
                {"command": "vmember", "inputs": ["x1"], "field": "GF(2)"},
                {"command": "nagata", "u": "0"},
            ]
        )
    )
    report, code = run_cli(capsys, ["batch", str(path), "--workers", "2"])
    assert [r["index"] for r in report] == [0, 1, 2, 3]
    assert [r["exit_code"] for r in report] == [0, 0, 1, 2]
    assert report[1]["report"]["sign"] == -1
    assert report[3]["report"]["error"] == "ZeroScalar"
    assert code == EXIT_INPUT


def test_batch_rejects_invalid_files(capsys, tmp_path):
    path = tmp_path / "batch.json"
    path.write_text(json.dumps({"command": "invert"}))
    report, code = run_cli(capsys, ["batch", str(path)])
    assert code == EXIT_INPUT
    assert report["error"] == "RequestError"

    report, code = run_cli(capsys, ["batch", str(tmp_path / "missing.json")])
    assert code == EXIT_INPUT


def test_request_defaults():
    request = Request({"command": "nagata"})
    assert request.field().tag() == "QQ"
    assert request.samples() == [1, 2]
    assert request.scalar("u") == 2


def test_split_list():
    assert split_list("1, 2") == ["1", "2"]
    assert split_list("[1,0],[0,1]") == ["[1,0]", "[0,1]"]


def test_input_syntax_error_location():
    error = InputSyntaxError("Bad", "ab\ncd", 4)
    assert (error.line(), error.column()) == (2, 2)


def test_exit_codes():
    assert exit_code(InvariantViolation("bug")) == EXIT_INVARIANT
    assert exit_code(NotSAut("no")) == 1
    assert exit_code(ZeroScalar("zero")) == EXIT_INPUT


def test_table_of_records():
    text = to_table([{"a": 1, "b": [1, 2]}, {"a": None}])
    assert "[1, 2]" in text
    assert "-" in text
