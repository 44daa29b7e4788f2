from __future__ import annotations

from enum import Enum
from typing import Any, MutableMapping, MutableSequence

from hardylab.core.context import PRODRULE_TOLERANCE, LabContext
from hardylab.prodrule import (
    brute_force_lattice_assignments,
    case_derivation_trace,
    classify_on_projectors,
    enumerate_lattice_assignments,
    enumerate_lattice_assignments_async,
    function_from_config,
    random_product_rule_trials,
    uniqueness_theorem_check,
)
from hardylab.prodrule.lattice import MAX_BRUTE_FORCE_DIMENSION
from hardylab.scenario.base import Scenario, Table


class ProdruleCommand(Enum):
    ENUMERATE = "enumerate"
    CHECK = "check"
    CLASSIFY = "classify"
    TRACE = "trace"
    UNIQUENESS = "uniqueness"


class ProdruleScenario(Scenario):
    kind = "prodrule"

    def __init__(self, context: LabContext, config: MutableMapping[str, Any]):
        super().__init__(context, config)
        # The resolved seed wins over the one stored in the file
        self.config["seed"] = context.seed

    @classmethod
    def defaults(cls, context: LabContext) -> MutableMapping[str, Any]:
        return {
            "command": ProdruleCommand.ENUMERATE.value,
            "n": 3,
            "function": {"case": "const1"},
            "trials": 1000,
            "parallel": False,
            "seed": context.seed,
        }

    async def _enumerate(self) -> MutableMapping[str, Any]:
        n = self.config["n"]
        if self.config["parallel"]:
            lattices = await enumerate_lattice_assignments_async(
                n, self.context.process_executor
            )
        else:
            lattices = enumerate_lattice_assignments(n)
        assignments = [
            {
                "kind": lattice.kind,
                "generator": (
                    sorted(lattice.generator) if lattice.generator is not None else None
                ),
                "ones": lattice.to_json()["ones"],
            }
            for lattice in lattices
        ]
        return {
            "n": n,
            "count": len(assignments),
            "assignments": assignments,
            "oracle_agrees": (
                brute_force_lattice_assignments(n) == lattices
                if n <= MAX_BRUTE_FORCE_DIMENSION
                else None
            ),
        }

    async def run(self) -> MutableMapping[str, Any]:
        command = ProdruleCommand(self.config["command"])
        n = self.config["n"]
        if command == ProdruleCommand.ENUMERATE:
            return await self._enumerate()
        elif command == ProdruleCommand.UNIQUENESS:
            return {"n": n, "holds": uniqueness_theorem_check(n)}
        function = function_from_config(self.config["function"])
        if command == ProdruleCommand.CHECK:
            return random_product_rule_trials(
                function,
                n,
                self.config["trials"],
                self.config["seed"],
                self.context.get_tolerance(PRODRULE_TOLERANCE),
            ).to_json()
        elif command == ProdruleCommand.CLASSIFY:
            return classify_on_projectors(function, n).to_json()
        else:
            return {
                "function": function.to_json(),
                "seed": self.config["seed"],
                "steps": [
                    s.to_json()
                    for s in case_derivation_trace(function, n, self.config["seed"])
                ],
            }

    def tables(self, result: MutableMapping[str, Any]) -> MutableSequence[Table]:
        command = ProdruleCommand(self.config["command"])
        if command == ProdruleCommand.ENUMERATE:
            return [
                Table(
                    f"PRODUCT-RULE ASSIGNMENTS for N = {result['n']} "
                    f"({result['count']} found, oracle agrees: "
                    f"{'-' if result['oracle_agrees'] is None else str(result['oracle_agrees']).lower()})",
                    ["KIND", "GENERATOR", "SUBSETS VALUED 1"],
                    [
                        [
                            a["kind"],
                            a["generator"],
                            " ".join(
                                "{" + ",".join(str(i) for i in s) + "}"
                                for s in a["ones"]
                            ),
                        ]
                        for a in result["assignments"]
                    ],
                )
            ]
        elif command == ProdruleCommand.UNIQUENESS:
            return [
                Table("UNIQUENESS", ["N", "HOLDS"], [[result["n"], result["holds"]]])
            ]
        elif command == ProdruleCommand.CHECK:
            return [
                Table(
                    "PRODUCT RULE TRIALS",
                    ["FUNCTION", "N", "TRIALS", "SEED", "FAILURES", "PASSED"],
                    [
                        [
                            result["function"]["case"],
                            result["n"],
                            result["trials"],
                            result["seed"],
                            len(result["failures"]),
                            result["passed"],
                        ]
                    ],
                )
            ]
        elif command == ProdruleCommand.CLASSIFY:
            return [
                Table(
                    f"CASE {result['case']} for N = {result['n']}",
                    ["P_i", "f(P_i)"],
                    [[i + 1, v] for i, v in enumerate(result["singletons"])],
                ),
                Table(
                    "MINIMAL PROJECTORS VALUED 1",
                    ["SUBSET"],
                    [[s] for s in result["minimal_projectors"]],
                ),
            ]
        else:
            return [
                Table(
                    f"DERIVATION of {result['function']['case']} (seed {result['seed']})",
                    ["IDENTITY", "LHS", "RHS", "HOLDS"],
                    [
                        [s["identity"], s["lhs"], s["rhs"], s["holds"]]
                        for s in result["steps"]
                    ],
                )
            ]
