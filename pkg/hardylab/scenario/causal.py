from __future__ import annotations

from typing import Any, MutableMapping, MutableSequence

from hardylab.causal import (
    HardyGeometry,
    LorentzBoost,
    SpacetimeEvent,
    er_criterion,
    gated_assignment,
    li1_check,
    region_membership,
)
from hardylab.causal.criteria import DEFAULT_COORDINATES
from hardylab.core.context import STATE_TOLERANCE, LabContext
from hardylab.core.exception import MissingAssignmentException
from hardylab.core.utils import format_real
from hardylab.hardy import HardyExperiment
from hardylab.scenario.base import Scenario, Table

# Observable -> (detector providing the information, event where it is measured)
GATES = {"U+": ("D-", "BS2+"), "U-": ("D+", "BS2-")}


def frame_name(beta: float) -> str:
    return f"beta={beta:g}"


class CausalScenario(Scenario):
    kind = "causal"

    def __init__(self, context: LabContext, config: MutableMapping[str, Any]):
        super().__init__(context, config)
        # Events missing from the file keep their default coordinates
        self.config["geometry"] = {
            **self.defaults(context)["geometry"],
            **self.config["geometry"],
        }

    @classmethod
    def defaults(cls, context: LabContext) -> MutableMapping[str, Any]:
        return {
            "geometry": {
                name: {"t": t, "x": x} for name, (t, x) in DEFAULT_COORDINATES.items()
            },
            "boosts": [0.0, 0.6, -0.6],
            "region": "union",
            "queries": [
                {"label": "D+", "t": 0.5, "x": 1.5},
                {"label": "D-", "t": 0.5, "x": -1.5},
            ],
            "criteria": ["ER1", "ER2", "ER3"],
        }

    async def run(self) -> MutableMapping[str, Any]:
        geometry = HardyGeometry.from_json(self.config["geometry"])
        frames = {frame_name(b): LorentzBoost(b) for b in self.config["boosts"]}
        tolerance = self.context.get_tolerance(STATE_TOLERANCE)
        region = geometry.region(self.config["region"])
        experiment = HardyExperiment()
        result = {
            "orderings": {
                name: [
                    {
                        "label": e.label,
                        "t": format_real(e.t, tolerance),
                        "x": format_real(e.x, tolerance),
                    }
                    for e in geometry.ordering(frame)
                ]
                for name, frame in frames.items()
            },
            "memberships": {
                q.get("label") or f"({q['t']:g}, {q['x']:g})": region_membership(
                    region, SpacetimeEvent.from_json(q), tolerance
                )
                for q in self.config["queries"]
            },
            "er_verdicts": {},
            "assignments": {},
            "li1": {},
        }
        for criterion in self.config["criteria"]:
            result["er_verdicts"][criterion] = {
                name: {
                    f"f({observable})": er_criterion(
                        criterion,
                        [geometry[detector]],
                        geometry[target],
                        frame,
                        tolerance,
                    )
                    for observable, (detector, target) in GATES.items()
                }
                for name, frame in frames.items()
            }
            assignments = {
                name: gated_assignment(
                    criterion,
                    geometry,
                    frame,
                    self.config["region"],
                    experiment,
                    tolerance,
                )
                for name, frame in frames.items()
            }
            result["assignments"][criterion] = {
                name: a.to_json()["values"] for name, a in assignments.items()
            }
            result["li1"][criterion] = {}
            for observable in ("U+", "U-", "U+U-"):
                try:
                    result["li1"][criterion][observable] = li1_check(
                        assignments, observable
                    )
                except MissingAssignmentException as e:
                    result["li1"][criterion][observable] = f"missing in {e.frame}"
        return result

    def tables(self, result: MutableMapping[str, Any]) -> MutableSequence[Table]:
        tables = [
            Table(
                f"ORDERING in frame {name}",
                ["EVENT", "T", "X"],
                [[e["label"], e["t"], e["x"]] for e in events],
            )
            for name, events in result["orderings"].items()
        ]
        tables.append(
            Table(
                f"MEMBERSHIP in the {self.config['region']} region",
                ["EVENT", "INSIDE"],
                [[label, inside] for label, inside in result["memberships"].items()],
            )
        )
        rows = []
        for criterion, frames in result["assignments"].items():
            for name, values in frames.items():
                verdicts = result["er_verdicts"][criterion][name]
                rows.append(
                    [
                        criterion,
                        name,
                        verdicts["f(U+)"],
                        verdicts["f(U-)"],
                        values.get("U+"),
                        values.get("U-"),
                        values.get("U+U-"),
                    ]
                )
        tables.append(
            Table(
                "ELEMENTS OF REALITY",
                [
                    "CRITERION",
                    "FRAME",
                    "GATE U+",
                    "GATE U-",
                    "f(U+)",
                    "f(U-)",
                    "f(U+U-)",
                ],
                rows,
            )
        )
        tables.append(
            Table(
                "LORENTZ INVARIANCE",
                ["CRITERION", "U+", "U-", "U+U-"],
                [
                    [criterion, checks["U+"], checks["U-"], checks["U+U-"]]
                    for criterion, checks in result["li1"].items()
                ],
            )
        )
        return tables
