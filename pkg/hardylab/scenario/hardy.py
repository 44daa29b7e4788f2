from __future__ import annotations

from typing import Any, Iterable, MutableMapping, MutableSequence

from hardylab.core.context import STATE_TOLERANCE, LabContext
from hardylab.core.utils import format_complex, format_real
from hardylab.hardy import ExperimentStage, HardyExperiment
from hardylab.scenario.base import Scenario, Table


# Outcomes reported when a scenario names none, per stage
STAGE_OUTCOMES: MutableMapping[str, MutableSequence[str]] = {
    ExperimentStage.INITIAL.value: ["S+S-"],
    ExperimentStage.AFTER_P.value: ["U+U-", "U+V-", "V+U-", "V+V-", "gamma"],
    ExperimentStage.AFTER_BS2_MINUS.value: ["C-", "D-", "gamma"],
    ExperimentStage.AFTER_BS2_PLUS.value: ["C+", "D+", "gamma"],
    ExperimentStage.AFTER_BOTH.value: ["C+C-", "C+D-", "D+C-", "D+D-", "gamma"],
}


def outcome_name(labels: Iterable[str]) -> str:
    return "{" + ", ".join(labels) + "}"


class HardyScenario(Scenario):
    kind = "hardy"

    @classmethod
    def defaults(cls, context: LabContext) -> MutableMapping[str, Any]:
        return {
            "stage": ExperimentStage.AFTER_BOTH.value,
            "bs2_plus_present": True,
            "bs2_minus_present": True,
            "conditionals": [
                {
                    "stage": ExperimentStage.AFTER_BS2_PLUS.value,
                    "target": "U-",
                    "condition": "D+",
                },
                {
                    "stage": ExperimentStage.AFTER_BS2_MINUS.value,
                    "target": "U+",
                    "condition": "D-",
                },
            ],
        }

    async def run(self) -> MutableMapping[str, Any]:
        experiment = HardyExperiment(
            self.config["bs2_plus_present"], self.config["bs2_minus_present"]
        )
        stage = self.config["stage"]
        state = experiment.evolve_to(stage).state
        tolerance = self.context.get_tolerance(STATE_TOLERANCE)
        self.config.setdefault("outcomes", list(STAGE_OUTCOMES[stage]))
        outcomes = {
            name: experiment.projector(stage, name) for name in self.config["outcomes"]
        }
        if "outcome" in self.config:
            projector = experiment.label_projector(
                stage, self.config["outcome"], outcome_name(self.config["outcome"])
            )
            outcomes[projector.name] = projector
        return {
            "stage": stage,
            "amplitudes": {
                label: format_complex(amplitude, tolerance)
                for label, amplitude in state.as_mapping().items()
            },
            "probabilities": {
                name: format_real(
                    experiment.outcome_probability(stage, projector), tolerance
                )
                for name, projector in outcomes.items()
            },
            "conditionals": [
                {
                    **c,
                    "probability": format_real(
                        experiment.conditional_probability(
                            c["stage"],
                            experiment.projector(c["stage"], c["target"]),
                            experiment.projector(c["stage"], c["condition"]),
                        ),
                        tolerance,
                    ),
                }
                for c in self.config["conditionals"]
            ],
        }

    def tables(self, result: MutableMapping[str, Any]) -> MutableSequence[Table]:
        return [
            Table(
                f"AMPLITUDES at stage {result['stage']}",
                ["LABEL", "AMPLITUDE"],
                [
                    [label, complex(a["re"], a["im"])]
                    for label, a in result["amplitudes"].items()
                ],
            ),
            Table(
                "OUTCOMES",
                ["OUTCOME", "PROBABILITY"],
                [[o, p] for o, p in result["probabilities"].items()],
            ),
            Table(
                "CONDITIONALS",
                ["STAGE", "TARGET", "CONDITION", "PROBABILITY"],
                [
                    [c["stage"], c["target"], c["condition"], c["probability"]]
                    for c in result["conditionals"]
                ],
            ),
        ]
