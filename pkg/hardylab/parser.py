import argparse
import json


def _function(value: str):
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(f"Invalid function JSON {value!r}: {e.msg}")


def _query(value: str):
    try:
        t, x = (float(c) for c in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"Invalid query {value!r}, expected two comma-separated numbers t,x"
        )
    return {"t": t, "x": x}


common_parser = argparse.ArgumentParser(add_help=False)
common_parser.add_argument(
    "--color",
    action="store_true",
    help="Prints log preamble with colors related to the logging level",
)
common_parser.add_argument(
    "--debug", action="store_true", help="Prints debug-level diagnostic output"
)
common_parser.add_argument(
    "--json", action="store_true", help="Print results as JSON instead of tables"
)
common_parser.add_argument(
    "--quiet", action="store_true", help="Only prints results, warnings and errors"
)
common_parser.add_argument(
    "--scenario",
    type=str,
    help="Path to a YAML or JSON scenario file. The value 'default' selects "
    "the built-in scenario (default: default)",
)
common_parser.add_argument(
    "--seed",
    type=int,
    help="Seed of the random generators. The HARDYLAB_SEED environment "
    "variable takes precedence (default: 0)",
)
common_parser.add_argument(
    "--tolerance",
    type=float,
    help="Numerical tolerance (default: 1e-12 for states, 1e-9 for product rules)",
)

parser = argparse.ArgumentParser(description="hardylab Command Line")
subparsers = parser.add_subparsers(dest="context")

# hardylab hardy
hardy_parser = subparsers.add_parser(
    "hardy",
    parents=[common_parser],
    help="Evolve the double interferometer and report outcome probabilities",
)
hardy_parser.add_argument(
    "--stage",
    type=str,
    choices=["initial", "after_p", "after_bs2_minus", "after_bs2_plus", "after_both"],
    help="Stage at which the state is reported (default: after_both)",
)

# hardylab abl
abl_parser = subparsers.add_parser(
    "abl",
    parents=[common_parser],
    help="Compute ABL probabilities for the pre- and post-selected ensemble",
)
abl_parser.add_argument(
    "--counterfactual",
    action="store_true",
    default=None,
    help="Read probability-one ABL predictions as elements of reality",
)

# hardylab causal
causal_parser = subparsers.add_parser(
    "causal",
    parents=[common_parser],
    help="Boost the experiment and check the element-of-reality criteria",
)
causal_parser.add_argument(
    "--boost",
    action="append",
    type=float,
    help="Velocity of a frame to analyse, can be repeated (default: 0, 0.6, -0.6)",
)
causal_parser.add_argument(
    "--query",
    action="append",
    type=_query,
    help="Event t,x whose membership in the region is reported, can be repeated",
)
causal_parser.add_argument(
    "--region",
    type=str,
    choices=["union", "intersection"],
    help="Combination of the detector cone exteriors (default: union)",
)

# hardylab prodrule
prodrule_parser = subparsers.add_parser(
    "prodrule",
    parents=[common_parser],
    help="Audit real functions obeying the product rule",
)
prodrule_parser.add_argument(
    "command",
    metavar="COMMAND",
    nargs="?",
    type=str,
    choices=["enumerate", "check", "classify", "trace", "uniqueness"],
    help="One of enumerate, check, classify, trace, uniqueness (default: enumerate)",
)
prodrule_parser.add_argument(
    "--function",
    type=_function,
    help='Product-rule function as JSON, e.g. \'{"case": "case2", "i": 1}\' '
    '(default: {"case": "const1"})',
)
prodrule_parser.add_argument(
    "--n", type=int, help="Dimension of the Hilbert space (default: 3)"
)
prodrule_parser.add_argument(
    "--parallel",
    action="store_true",
    default=None,
    help="Explore enumeration branches on a process pool",
)
prodrule_parser.add_argument(
    "--trials",
    type=int,
    help="Number of random operator pairs for check (default: 1000)",
)

# hardylab demo
demo_parser = subparsers.add_parser(
    "demo", parents=[common_parser], help="Run a scripted walkthrough"
)
demo_parser.add_argument(
    "name",
    metavar="NAME",
    type=str,
    choices=["hardy-paradox", "aharonov-albert"],
    help="One of hardy-paradox, aharonov-albert",
)

# hardylab version
version_parser = subparsers.add_parser(
    "version", help="Only print hardylab version and exit"
)
