"""
Tests for controller/config.py
"""

from pathlib import Path

import pytest

from ExpSumLab.controller.config import ProblemConfig, load_config
from ExpSumLab.utils.errors import ConfigError

CUBE_TOML = """
[problem]
p = 2
m = 1
n = 1
D = [[3]]
f = [{ d = [3], c = "1" }]

[run]
kmax = 4
precision = 0
empty_correction = "auto"
sign_convention = "both"
"""

def test_load_config(tmp_path):
    """A TOML file becomes a config named after the file."""
    path = tmp_path / "cube.toml"
    path.write_text(CUBE_TOML, encoding="utf-8")
    cfg = load_config(path)
    assert cfg.name == "cube"
    assert (cfg.p, cfg.m, cfg.n, cfg.q) == (2, 1, 1, 2)
    assert cfg.D == ((3,),)
    assert cfg.f == (((3,), "1"),)
    assert cfg.kmax == 4
    assert cfg.precision is None
    assert cfg.sign_convention == "both"
    assert cfg.polynomial().exponents == ((3,),)

def test_from_dict_defaults():
    """n and D are inferred from the terms; [run] is optional."""
    cfg = ProblemConfig.from_dict(
        {"problem": {"p": 3, "m": 2, "f": [{"d": [1, 1], "c": "a"}, {"d": [2, 0], "c": [1, 1]}]}}
    )
    assert cfg.n == 2
    assert cfg.D == ((1, 1), (2, 0))
    assert cfg.f[1] == ((2, 0), (1, 1))
    assert cfg.kmax == 8
    assert cfg.empty_correction == "auto"

def test_from_terms_and_overrides():
    """Overrides replace run options; None keeps the old value."""
    cfg = ProblemConfig.from_terms(2, 1, {(1, 0): "1", (0, 1): "1"}, kmax=3, name="x+y")
    assert cfg.D == ((0, 1), (1, 0))
    changed = cfg.with_overrides(kmax=2, precision=None, empty_correction="off")
    assert changed.kmax == 2 and changed.precision is None
    assert changed.empty_correction == "off"
    assert changed.name == "x+y"
    assert changed.to_dict()["f"] == [{"d": [0, 1], "c": "1"}, {"d": [1, 0], "c": "1"}]

@pytest.mark.parametrize(
    "problem, run",
    [
        ({"p": 4, "f": [{"d": [1], "c": "1"}]}, {}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}], "D": [[1], [2]]}, {}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}, {"d": [1], "c": "1"}]}, {}),
        ({"p": 2, "f": [{"d": [-1], "c": "1"}]}, {}),
        ({"p": 2, "f": [{"d": [1]}]}, {}),
        ({"p": 2, "f": [{"d": [1], "c": 1.5}]}, {}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}]}, {"kmax": 0}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}]}, {"empty_correction": "maybe"}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}]}, {"sign_convention": "other"}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}]}, {"threads": 0}),
        ({"p": 2, "f": [{"d": [1], "c": "1"}]}, {"colour": "red"}),
        ({"m": 1, "f": [{"d": [1], "c": "1"}]}, {}),
    ],
)
def test_malformed_configs(problem, run):
    """Every malformed table raises ConfigError."""
    with pytest.raises(ConfigError):
        ProblemConfig.from_dict({"problem": problem, "run": run})

def test_missing_problem_table():
    """The [problem] table is required."""
    with pytest.raises(ConfigError):
        ProblemConfig.from_dict({"run": {"kmax": 2}})

def test_zero_coefficient_is_rejected():
    """A coefficient that vanishes in F_q leaves D unsupported."""
    cfg = ProblemConfig.from_terms(2, 1, {3: "2"})
    with pytest.raises(ConfigError):
        cfg.polynomial()

def test_unreadable_files(tmp_path):
    """Missing files and invalid TOML raise ConfigError."""
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.toml")
    broken = tmp_path / "broken.toml"
    broken.write_text("[problem\np = 2", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(broken)

PROBLEMS = sorted((Path(__file__).parents[2] / "problems").glob("*.toml"))

@pytest.mark.parametrize("path", PROBLEMS, ids=[path.stem for path in PROBLEMS])
def test_bundled_problems_load(path):
    """Every bundled problem file parses and builds its polynomial."""
    cfg = load_config(path)
    f = cfg.polynomial()
    assert cfg.name == path.stem
    assert set(f.exponents) == set(cfg.D)
