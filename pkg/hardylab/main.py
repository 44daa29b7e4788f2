from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from typing import Any, MutableMapping

from hardylab.config.validator import ScenarioValidator
from hardylab.core.context import LabContext
from hardylab.core.exception import HardyLabException, ScenarioDefinitionException
from hardylab.core.utils import dumps, resolve_seed
from hardylab.demo import demo_functions
from hardylab.log_handler import CustomFormatter, HighlitingFilter, logger
from hardylab.parser import parser
from hardylab.scenario import SCENARIO_VERSION, scenario_classes

USAGE_ERROR = 2

# Scenario field -> command line option, per subcommand
OVERRIDES: MutableMapping[str, MutableMapping[str, str]] = {
    "hardy": {"stage": "stage"},
    "abl": {"counterfactual": "counterfactual"},
    "causal": {"boosts": "boost", "queries": "query", "region": "region"},
    "prodrule": {
        "command": "command",
        "function": "function",
        "n": "n",
        "parallel": "parallel",
        "trials": "trials",
    },
}


def _load_scenario(args: argparse.Namespace) -> MutableMapping[str, Any]:
    validator = ScenarioValidator()
    if args.scenario is not None and args.scenario != "default":
        config = validator.validate_file(args.scenario)
        if config["kind"] != args.context:
            raise ScenarioDefinitionException(
                f"Scenario {args.scenario} describes a {config['kind']} analysis, "
                f"it cannot be run by the {args.context} command"
            )
    else:
        config = {"version": SCENARIO_VERSION, "kind": args.context}
    for field, option in OVERRIDES[args.context].items():
        if (value := getattr(args, option)) is not None:
            config[field] = value
    return validator.validate(config)


def _build_context(
    args: argparse.Namespace, config: MutableMapping[str, Any]
) -> LabContext:
    seed = resolve_seed(args.seed if args.seed is not None else config.get("seed"))
    return LabContext(config, seed=seed, tolerance=args.tolerance)


async def _async_demo(args: argparse.Namespace):
    context = _build_context(args, {})
    try:
        result, tables = await demo_functions[args.name](context)
        if args.json:
            print(dumps({"demo": args.name, "result": result}))
        else:
            print("\n\n".join(str(t) for t in tables))
    finally:
        await context.close()


async def _async_run(args: argparse.Namespace):
    config = _load_scenario(args)
    context = _build_context(args, config)
    try:
        scenario = scenario_classes[args.context](context, config)
        result = await scenario.run()
        if args.json:
            print(dumps({"scenario": scenario.config, "result": result}))
        else:
            print(scenario.render(result))
    finally:
        await context.close()


def _setup_logging(args: argparse.Namespace):
    if args.quiet:
        logger.setLevel(logging.WARN)
    elif args.debug:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)
    if args.color and hasattr(sys.stderr, "isatty") and sys.stderr.isatty():
        coloredStreamHandler = logging.StreamHandler()
        coloredStreamHandler.setFormatter(CustomFormatter())
        logger.handlers = []
        logger.addHandler(coloredStreamHandler)
        logger.addFilter(HighlitingFilter())


def main(args):
    try:
        args = parser.parse_args(args)
        if args.context == "version":
            from hardylab.version import VERSION

            print(f"hardylab version {VERSION}")
        elif args.context == "demo":
            _setup_logging(args)
            asyncio.run(_async_demo(args))
        elif args.context in scenario_classes:
            _setup_logging(args)
            asyncio.run(_async_run(args))
        else:
            parser.print_help(file=sys.stderr)
            return USAGE_ERROR
        return 0
    except SystemExit as se:
        return se.code
    except ScenarioDefinitionException as e:
        logger.error(str(e))
        return USAGE_ERROR
    except HardyLabException as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    except Exception as e:
        logger.exception(e)
        return 1


def run():
    return main(sys.argv[1:])


if __name__ == "__main__":
    main(sys.argv[1:])
