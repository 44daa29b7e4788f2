from __future__ import annotations

import logging
from typing import Any, MutableMapping, MutableSequence

from hardylab.abl import (
    ProjectorFamily,
    abl_probability,
    assign_elements,
    audit_product_rule,
    hardy_ensemble,
)
from hardylab.abl.reality import ASSIGNMENT_TOLERANCE
from hardylab.core.context import STATE_TOLERANCE, LabContext
from hardylab.core.utils import format_real
from hardylab.hardy import ExperimentStage, HardyExperiment
from hardylab.log_handler import logger
from hardylab.scenario.base import Scenario, Table


class AblScenario(Scenario):
    kind = "abl"

    @classmethod
    def defaults(cls, context: LabContext) -> MutableMapping[str, Any]:
        return {
            "pre_stage": ExperimentStage.AFTER_P.value,
            "post_outcome": "d+d-",
            "observables": ["U+", "U-", "U+U-"],
            "pairs": [["U+", "U-"]],
            "counterfactual": False,
        }

    async def run(self) -> MutableMapping[str, Any]:
        experiment = HardyExperiment()
        stage = self.config["pre_stage"]
        ensemble = hardy_ensemble(self.config["post_outcome"], stage, experiment)
        projectors = {
            name: experiment.projector(stage, name)
            for name in self.config["observables"]
        }
        tolerance = self.context.get_tolerance(STATE_TOLERANCE)
        result = {
            "probabilities": {
                name: format_real(
                    abl_probability(ensemble, ProjectorFamily.binary(p), 0), tolerance
                )
                for name, p in projectors.items()
            },
            "assignment": None,
            "violations": None,
        }
        if self.config["counterfactual"]:
            assignment = assign_elements(
                ensemble,
                projectors.values(),
                self.context.get_tolerance(ASSIGNMENT_TOLERANCE),
            )
            result["assignment"] = assignment.to_json()["values"]
            result["violations"] = [
                v.to_json()
                for v in audit_product_rule(
                    assignment,
                    [
                        (
                            experiment.projector(stage, a),
                            experiment.projector(stage, b),
                        )
                        for a, b in self.config["pairs"]
                    ],
                )
            ]
        elif logger.isEnabledFor(logging.INFO):
            logger.info(
                "SKIPPED elements of reality: reading the ABL rule counterfactually "
                "needs counterfactual: true"
            )
        return result

    def tables(self, result: MutableMapping[str, Any]) -> MutableSequence[Table]:
        tables = [
            Table(
                f"ABL PROBABILITIES pre = {self.config['pre_stage']}, "
                f"post = {self.config['post_outcome']}",
                ["OBSERVABLE", "P(1)", "f"],
                [
                    [name, p, (result["assignment"] or {}).get(name)]
                    for name, p in result["probabilities"].items()
                ],
            )
        ]
        if result["violations"] is not None:
            tables.append(
                Table(
                    "PRODUCT RULE VIOLATIONS",
                    ["A", "B", "f(A)", "f(B)", "f(AB)"],
                    [
                        [v["a"], v["b"], v["f_a"], v["f_b"], v["f_ab"]]
                        for v in result["violations"]
                    ],
                )
            )
        return tables
