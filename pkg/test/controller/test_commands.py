"""
Tests for controller/commands.py
"""

import json

import pytest

from ExpSumLab.controller.commands import CommandResult, Controller
from ExpSumLab.controller.config import ProblemConfig

CUBE = ProblemConfig.from_terms(2, 1, {3: "1"}, kmax=3, name="x^3/F2")
PLANE = ProblemConfig.from_terms(2, 1, {(1, 0): "1", (0, 1): "1"}, kmax=2, name="x+y/F2")

@pytest.fixture
def controller():
    return Controller()

def test_command_table(controller):
    """Every subcommand has a handler."""
    assert controller.commands == (
        "density", "support", "matrix", "lseries", "curve", "verify", "selftest"
    )

def test_dispatch_errors(controller):
    """Unknown commands and missing configs raise ValueError."""
    with pytest.raises(ValueError):
        controller.handle_input_command("plot", CUBE)
    with pytest.raises(ValueError):
        controller.handle_input_command("density")

def test_density_command(controller):
    """Density, support and 1-based qualifying subsets."""
    result = controller.handle_input_command("density", PLANE)
    assert result.passed
    assert result.payload["density"] == "2"
    assert result.payload["qualifying_subsets"] == [[1], [2], [1, 2]]
    assert "density = 2" in result.text

def test_support_command(controller):
    """Critical edges of the 2-cycle are flagged, the loop at 3 is not."""
    result = controller.handle_input_command("support", CUBE)
    payload = result.payload
    assert payload["mean"] == "1/2"
    assert payload["critical_nodes"] == [[1], [2]]
    flags = {(tuple(e["from"]), tuple(e["to"])): e["critical"] for e in payload["edges"]}
    assert flags == {((1,), (2,)): True, ((2,), (1,)): True, ((3,), (3,)): False}

def test_matrix_command(controller):
    """One subset with a 2 x 2 matrix."""
    result = controller.handle_input_command("matrix", CUBE)
    (block,) = result.payload["subsets"]
    assert block["I"] == [1]
    assert block["support"] == [[1], [2]]
    assert len(block["entries"]) == 2 and len(block["entries"][0]) == 2
    assert result.payload["e"] == 2

def test_lseries_command(controller):
    """Sums and coefficients in the zeta basis."""
    result = controller.handle_input_command("lseries", CUBE)
    assert result.payload["coefficients"] == [[1], [0], [2], [0]]
    assert result.payload["sums"] == [[0], [4], [0]]

def test_curve_command(controller):
    """Numerator, character product and norm congruence."""
    result = controller.handle_input_command("curve", CUBE)
    assert result.passed
    assert result.payload["numerator"] == [1, 0, 2]
    assert result.payload["genus"] == 1
    assert result.payload["character_product_matches"]

def test_verify_command_json(controller):
    """The JSON report carries the schema version and command name."""
    result = controller.handle_input_command("verify", CUBE, include_timing=True)
    body = json.loads(result.to_json())
    assert body["schema_version"] == "1.0"
    assert body["command"] == "verify"
    assert body["verdict"] == "pass"
    assert "seconds" in body

def test_selftest_command(controller):
    """Fault injection turns the verdict to fail."""
    result = controller.handle_input_command("selftest", corrupt_lambda=True, suites=("lambda",))
    assert not result.passed
    assert result.payload["verdict"] == "fail"

def test_command_result_json():
    """Payload keys are merged after the header."""
    result = CommandResult("density", "text", {"density": "1"})
    assert json.loads(result.to_json()) == {
        "schema_version": "1.0", "command": "density", "density": "1"
    }
