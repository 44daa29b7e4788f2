import os

import pytest

from hardylab.config.validator import FunctionValidator, ScenarioValidator
from hardylab.core.exception import ScenarioDefinitionException

from tests.conftest import write_scenario


@pytest.mark.parametrize("kind", ["hardy", "abl", "causal", "prodrule"])
def test_minimal_scenario(kind: str):
    """Test that a scenario needs nothing but its version and kind"""
    config = {"version": 1, "kind": kind}
    assert ScenarioValidator().validate(config) == config


def test_full_scenario():
    """Test a scenario that sets every field of its kind"""
    ScenarioValidator().validate(
        {
            "version": 1,
            "kind": "causal",
            "geometry": {"BS2+": {"t": 0.0, "x": 2.0}, "D+": {"t": 1.0, "x": 2.5}},
            "boosts": [0.0, 0.9, -0.9],
            "region": "intersection",
            "queries": [{"label": "far", "t": 0.0, "x": 10.0}, {"t": 1.0, "x": 0.0}],
            "criteria": ["ER1", "ER3"],
        }
    )


def test_hardy_scenario():
    """Test a hardy scenario with beam-splitter flags and a label-set outcome"""
    config = {
        "version": 1,
        "kind": "hardy",
        "bs2_plus_present": True,
        "bs2_minus_present": False,
        "stage": "after_both",
        "outcome": ["c+", "c-"],
    }
    assert ScenarioValidator().validate(config) == config
    with pytest.raises(ScenarioDefinitionException, match=" - outcome: "):
        ScenarioValidator().validate({**config, "outcome": []})
    with pytest.raises(ScenarioDefinitionException, match=" - <root>: "):
        ScenarioValidator().validate({"version": 1, "kind": "hardy", "bs2_plus": True})


def test_unsupported_version():
    """Test that only known versions of the format are accepted"""
    with pytest.raises(ScenarioDefinitionException, match="unsupported"):
        ScenarioValidator().validate({"version": 2, "kind": "hardy"})
    with pytest.raises(ScenarioDefinitionException):
        ScenarioValidator().validate({"kind": "hardy"})


@pytest.mark.parametrize(
    "config,location",
    [
        ({"version": 1, "kind": "hardy", "detectors": 2}, "<root>"),
        ({"version": 1, "kind": "bell"}, "kind"),
        ({"version": 1, "kind": "causal", "boosts": [0.5, 1.0]}, "boosts/1"),
        ({"version": 1, "kind": "causal", "region": "both"}, "region"),
        ({"version": 1, "kind": "hardy", "stage": "after_d"}, "stage"),
        ({"version": 1, "kind": "prodrule", "n": 2}, "n"),
        ({"version": 1, "kind": "abl", "pairs": [["U+"]]}, "pairs/0"),
    ],
)
def test_invalid_scenario(config, location: str):
    """Test that schema violations are reported with their location"""
    with pytest.raises(ScenarioDefinitionException) as e:
        ScenarioValidator().validate(config)
    assert str(e.value).startswith("The hardylab scenario is invalid because:")
    assert f" - {location}: " in str(e.value)


def test_scenario_must_be_a_mapping():
    """Test that a list is not a scenario"""
    with pytest.raises(ScenarioDefinitionException):
        ScenarioValidator().validate([{"version": 1, "kind": "hardy"}])


def test_yaml_scenario(tmp_path):
    """Test that scenarios are read from YAML files"""
    path = os.path.join(tmp_path, "causal.yml")
    with open(path, "w") as f:
        f.write(
            "version: 1\n"
            "kind: causal\n"
            "boosts:\n"
            "  - 0.6\n"
            "  - -0.6\n"
            "region: intersection\n"
        )
    config = ScenarioValidator().validate_file(path)
    assert config["boosts"] == [0.6, -0.6]
    assert config["region"] == "intersection"


def test_json_scenario(tmp_path):
    """Test that JSON scenarios are valid YAML"""
    path = write_scenario(
        tmp_path, {"version": 1, "kind": "abl", "counterfactual": True}
    )
    assert ScenarioValidator().validate_file(path)["counterfactual"] is True


def test_unreadable_scenario(tmp_path):
    """Test that missing and malformed files are definition errors"""
    with pytest.raises(ScenarioDefinitionException):
        ScenarioValidator().validate_file(os.path.join(tmp_path, "missing.yml"))
    path = os.path.join(tmp_path, "broken.yml")
    with open(path, "w") as f:
        f.write("version: [1\n")
    with pytest.raises(ScenarioDefinitionException):
        ScenarioValidator().validate_file(path)


@pytest.mark.parametrize(
    "config",
    [
        {"case": "lattice", "n": 3, "ones": [[1], [1, 2]]},
        {"case": "lattice", "n": 4, "filter": [1, 4]},
        {"case": "case3", "indices": [1, 2], "alphas": [0.5, 2.0]},
    ],
)
def test_valid_function(config):
    """Test function definitions accepted by their case schema"""
    assert FunctionValidator().validate(config) == config


def test_lattice_needs_one_form():
    """Test that a lattice is given either by its subsets or by a filter"""
    with pytest.raises(ScenarioDefinitionException) as e:
        FunctionValidator().validate(
            {"case": "lattice", "n": 3, "ones": [[1]], "filter": [1]}
        )
    assert str(e.value).startswith("The hardylab function is invalid because:")
    with pytest.raises(ScenarioDefinitionException):
        FunctionValidator().validate({"case": "lattice", "n": 3})
