import json

import pytest

from src.cli import build_parser, run

ORACLE = ["--oracle-m-max", "64", "--oracle-tests", "4"]
EXAMPLE6_SET = "[0,2pi) U [4pi,6pi) U [8pi,10pi)"


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ("XI_SAMPLES", "GRID_N", "TOL", "KAPPA_CONVENTION", "ORACLE_M_MAX", "ORACLE_TESTS", "SEED", "OUTPUT"):
        monkeypatch.delenv(f"WHFRAMES_{key}", raising=False)


@pytest.mark.parametrize(
    "literal, code",
    [
        ("[0,2pi)", 0),
        ("[0,4pi)", 1),
        ("[3pi,7pi)", 1),
        ("[0,2pi", 3),
        ("[2pi,pi)", 3),
    ],
)
def test_check_set_exit_codes(literal, code):
    assert run(["check-set", literal, *ORACLE]) == code


def test_unknown_flag_is_a_usage_error(capsys):
    assert run(["check-set", "[0,2pi)", "--fast"]) == 3
    assert "error:" in capsys.readouterr().err


def test_missing_subcommand_is_a_usage_error():
    assert run([]) == 3


def test_invalid_config_value(capsys):
    assert run(["check-set", "[0,2pi)", "--grid", "100"]) == 3
    assert "grid_n" in capsys.readouterr().err


def test_decompose_prints_json(capsys):
    assert run(["decompose", "(5/2pi,7/2pi] U (4pi,11/2pi]"]) == 0
    captured = capsys.readouterr()
    document = json.loads(captured.out)
    assert document["space"] == "L2(Omega)"
    assert [entry["base"] for entry in document["decomposition"]] == ["[0,1/2pi)", "[1/2pi,3/2pi)"]
    assert "2 generator(s)" in captured.err


def test_bounds(capsys):
    assert run(["bounds", "--steps", "4:0,3:1,2:3", "--kappa-convention", "paper", *ORACLE]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["verdict"] == "frame"
    assert "paper" in captured.err


def test_frame_report_carries_both_bound_conventions(capsys):
    assert run(["check-set", "[0,2pi)", *ORACLE]) == 0
    bounds = json.loads(capsys.readouterr().out)["bounds"]
    assert sorted(bounds) == ["calibrated", "paper"]
    assert bounds["paper"]["A0"] == pytest.approx(1 / (2 * 3.141592653589793))


def test_bounds_rejects_malformed_steps():
    assert run(["bounds", "--steps", "4:x"]) == 3


def test_analyze_sine(resources, capsys):
    assert run(["analyze", "--fn", str(resources / "sin.pw"), "--set", "[0,2pi)"]) == 1
    assert "witness" in capsys.readouterr().err


def test_analyze_missing_file(tmp_path):
    assert run(["analyze", "--fn", str(tmp_path / "absent.pw"), "--set", "[0,2pi)"]) == 3


def test_zak_writes_csv(resources, capsys):
    assert run(["zak", "--fn", str(resources / "one.pw"), "--set", "[0,2pi)", "--grid", "64"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,w,re,im,abs2"
    assert len(lines) == 64 * 64 + 1


def test_output_file(resources, tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["check-set", "[0,4pi)", "--output", str(target)]) == 1
    assert json.loads(target.read_text())["verdict"] == "not_frame"
    assert capsys.readouterr().out == ""


def test_config_file(tmp_path, resources):
    config_file = tmp_path / "frames.env"
    config_file.write_text("grid_n=64\n")
    target = tmp_path / "zak.csv"
    code = run(["zak", "--fn", str(resources / "one.pw"), "--config", str(config_file), "-o", str(target)])
    assert code == 0
    assert len(target.read_text().splitlines()) == 64 * 64 + 1


def test_verify_example_six(resources):
    args = ["verify", "--fn", str(resources / "example6.pw"), "--set", EXAMPLE6_SET]
    assert run([*args, "--grid", "256", "--xi-samples", "64", *ORACLE]) == 0


def test_verify_two_periods(resources):
    args = ["verify", "--fn", str(resources / "one.pw"), "--set", "[0,4pi)"]
    assert run([*args, "--grid", "64", "--xi-samples", "64", *ORACLE]) == 1


def test_parser_lists_every_subcommand():
    help_text = build_parser().format_help()
    for command in ("decompose", "check-set", "bounds", "analyze", "zak", "verify"):
        assert command in help_text
