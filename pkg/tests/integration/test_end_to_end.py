"""End-to-end runs of the larger verification workloads.

These build resolutions and liftings well past the unit-test sizes; deselect with -m "not slow".
"""

import json

import pytest

from quiver_cohomology.presentation.cli import main

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def test_verify_resolution_s4_characteristic_two(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["verify-resolution", "--s", "4", "--char", "2", "--max-degree", "10"]
    args += ["--format", "json"]
    assert main(args) == 0

    body = json.loads(capsys.readouterr().out)
    names = [check["name"] for check in body["checks"]]
    assert body["passed"] is True
    assert names[:3] == ["complex", "exact_and_minimal", "recursion"]
    assert "stated_bases[n=10]" in names


def test_dims_s4_rationals(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["dims", "--s", "4", "--max-degree", "7", "--format", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert [row["dim_hh_computed"] for row in body["rows"]] == [1, 4, 3, 0, 5, 12, 7, 0]
    assert all(window["holds"] for window in body["euler_windows"])


def test_ring_check_s3_rationals(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ring-check", "--s", "3", "--max-power", "2", "--format", "json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["case"] == "i"
    assert body["generator_degree"] == 6
    assert body["generator_count"] == 7
    assert body["passed"] is True


def test_ring_check_s4_rationals(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["ring-check", "--s", "4", "--max-power", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "ring-check s=4 char=0: case (ii), D=4, 5 generators"
    assert out.endswith("overall: PASS\n")


def test_yoneda_s3_characteristic_two(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["yoneda", "--s", "3", "--char", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,l,degree,class_coordinates,matches,theta_agrees"
    assert len(lines) == 17
    assert all(line.split(",")[4] == "true" for line in lines[1:])
