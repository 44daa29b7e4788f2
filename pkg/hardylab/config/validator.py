from __future__ import annotations

import logging
import os
from typing import TYPE_CHECKING

from jsonschema import Draft7Validator
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from hardylab.core import utils
from hardylab.core.exception import ScenarioDefinitionException
from hardylab.log_handler import logger

if TYPE_CHECKING:
    from typing import Any, MutableMapping


def _location(error) -> str:
    return "/".join(str(p) for p in error.absolute_path) or "<root>"


def handle_errors(errors, subject: str = "scenario"):
    errors = list(sorted(errors, key=str))
    if not errors:
        return
    raise ScenarioDefinitionException(
        "The hardylab {subject} is invalid because:\n{error_msgs}".format(
            subject=subject,
            error_msgs="\n".join(
                [f" - {_location(err)}: {err.message}" for err in errors]
            ),
        )
    )


def load_jsonschema(config: MutableMapping[str, Any]) -> MutableMapping[str, Any]:
    if not isinstance(config, dict):
        raise ScenarioDefinitionException(
            f"A scenario must be a mapping, not {type(config).__name__}"
        )
    version = config.get("version")
    filename = utils.get_schema_path(
        __package__, "schemas", f"v{version}", "scenario_schema.json"
    )
    if not os.path.exists(filename):
        raise ScenarioDefinitionException(f"Version {version!r} is unsupported")
    return utils.load_schema(filename)


class ScenarioValidator:
    def __init__(self) -> None:
        super().__init__()
        self.yaml = YAML(typ="safe")

    def validate_file(self, scenario_file: str) -> MutableMapping[str, Any]:
        if logger.isEnabledFor(logging.INFO):
            logger.info(f"LOADING scenario from {scenario_file}")
        try:
            with open(scenario_file) as f:
                scenario_config = self.yaml.load(f)
        except OSError as e:
            raise ScenarioDefinitionException(
                f"Cannot read scenario file {scenario_file}: {e.strerror}"
            ) from e
        except YAMLError as e:
            raise ScenarioDefinitionException(
                f"Cannot parse scenario file {scenario_file}: {e}"
            ) from e
        return self.validate(scenario_config)

    def validate(self, scenario_config: MutableMapping[str, Any]):
        from hardylab.scenario import scenario_classes

        schema = load_jsonschema(scenario_config)
        utils.inject_schema(schema, scenario_classes, "kind")
        validator = Draft7Validator(schema)
        handle_errors(validator.iter_errors(scenario_config))
        return scenario_config


class FunctionValidator:
    def validate(self, function_config: MutableMapping[str, Any]):
        from hardylab.prodrule.function import function_classes

        schema = utils.load_schema(
            utils.get_schema_path(
                "hardylab.prodrule", "schemas", "function_schema.json"
            )
        )
        utils.inject_schema(schema, function_classes, "case")
        validator = Draft7Validator(schema)
        handle_errors(validator.iter_errors(function_config), "function")
        return function_config
