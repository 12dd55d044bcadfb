import json
import pathlib

import jsonschema
import pytest

import edgeplace as ep

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "run_config.schema.json").read_text())


def test_reference_config_matches_schema():
    config = json.loads((ROOT / "configs" / "reference.json").read_text())
    jsonschema.validate(config, SCHEMA)
    scenario = ep.scenario_from_config(config)
    assert scenario.device_count == 632
    assert scenario.slot_count == 12


def test_schema_defaults_are_accepted_by_the_parser():
    defaults = {}
    for key, spec in SCHEMA["properties"].items():
        if "properties" in spec:
            defaults[key] = {k: v["default"] for k, v in spec["properties"].items()}
        else:
            defaults[key] = spec["default"]
    defaults["mobility"]["slots"] = 2
    jsonschema.validate(defaults, SCHEMA)
    assert ep.scenario_from_config(defaults).slot_count == 2


def test_unknown_keys_rejected_by_both():
    bad = {"topology": {"rowz": 5}}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, SCHEMA)
    with pytest.raises(ValueError, match="topology.rowz"):
        ep.scenario_from_config(bad)
