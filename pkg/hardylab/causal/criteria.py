from __future__ import annotations

import logging
from enum import Enum
from typing import Any, Iterable, MutableMapping, MutableSequence

from hardylab.abl import (
    ProjectorFamily,
    RealityAssignment,
    abl_probability,
    certain_value,
    hardy_ensemble,
)
from hardylab.causal.geometry import LorentzBoost, SpacetimeEvent
from hardylab.causal.region import (
    CausalRegion,
    NonlocalKind,
    backward_cone,
    hellwig_kraus_validity,
    nonlocal_region,
    outside_forward_cone,
    to_nonlocal_kind,
)
from hardylab.core.context import STATE_TOLERANCE
from hardylab.core.exception import (
    CausalException,
    CriterionException,
    MissingAssignmentException,
)
from hardylab.hardy import ExperimentStage, HardyExperiment
from hardylab.log_handler import logger
from hardylab.statespace import Projector

HARDY_EVENTS = ("U+box", "U-box", "BS2+", "BS2-", "D+", "D-")
DEFAULT_COORDINATES: MutableMapping[str, tuple[float, float]] = {
    "U+box": (-1.0, 1.0),
    "U-box": (-1.0, -1.0),
    "BS2+": (0.0, 1.0),
    "BS2-": (0.0, -1.0),
    "D+": (0.5, 1.5),
    "D-": (0.5, -1.5),
}


class Criterion(Enum):
    ER1 = "ER1"
    ER2 = "ER2"
    ER3 = "ER3"


def to_criterion(kind: Criterion | str) -> Criterion:
    try:
        return kind if isinstance(kind, Criterion) else Criterion(kind.upper())
    except ValueError:
        raise CriterionException(
            f"Unknown criterion {kind!r}, expected one of {[c.value for c in Criterion]}"
        ) from None


class HardyGeometry:
    """
    Spacetime placement of the two interferometers. The positron arm lies at
    positive x, the electron arm at negative x. In the laboratory frame both
    particles reach their second beam splitter at the same time.
    """

    __slots__ = ("events",)

    def __init__(
        self,
        events: MutableMapping[str, SpacetimeEvent] | None = None,
        tolerance: float = STATE_TOLERANCE,
    ):
        if events is None:
            events = {
                name: SpacetimeEvent(t, x, name)
                for name, (t, x) in DEFAULT_COORDINATES.items()
            }
        if missing := [name for name in HARDY_EVENTS if name not in events]:
            raise CausalException(f"Hardy geometry is missing events {missing}")
        if abs(events["BS2+"].t - events["BS2-"].t) > tolerance:
            raise CausalException(
                "BS2+ and BS2- must be simultaneous in the laboratory frame, got "
                f"t = {events['BS2+'].t} and t = {events['BS2-'].t}"
            )
        self.events: MutableMapping[str, SpacetimeEvent] = {
            name: events[name].relabel(name) for name in HARDY_EVENTS
        }

    def __getitem__(self, name: str) -> SpacetimeEvent:
        try:
            return self.events[name]
        except KeyError:
            raise CausalException(f"Unknown Hardy event {name!r}") from None

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> HardyGeometry:
        return cls(
            {
                name: SpacetimeEvent(coordinates["t"], coordinates["x"], name)
                for name, coordinates in value.items()
            }
        )

    def ordering(
        self, frame: LorentzBoost | None = None
    ) -> MutableSequence[SpacetimeEvent]:
        """Events in the order of their time coordinate in ``frame``."""
        frame = frame or LorentzBoost(0.0)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"BOOSTING Hardy events with beta = {frame.beta:g}")
        return sorted(
            (frame.apply(e) for e in self.events.values()),
            key=lambda e: (e.t, e.label),
        )

    def region(self, kind: NonlocalKind | str) -> CausalRegion:
        return nonlocal_region(kind, [self.events["U+box"], self.events["U-box"]])

    def to_json(self) -> MutableMapping[str, Any]:
        return {name: {"t": e.t, "x": e.x} for name, e in self.events.items()}


def er_criterion(
    kind: Criterion | str,
    info_events: Iterable[SpacetimeEvent],
    target: SpacetimeEvent,
    frame: LorentzBoost | None = None,
    tolerance: float = STATE_TOLERANCE,
) -> bool:
    """
    Geometric side of an element-of-reality criterion: whether information
    gathered at ``info_events`` is admissible to infer a value at ``target``.
    """
    kind = to_criterion(kind)
    info_events = list(info_events)
    if not info_events:
        raise CriterionException(f"{kind.value} needs at least one information event")
    if kind == Criterion.ER1:
        if frame is None:
            raise CriterionException("ER1 compares times and needs a Lorentz frame")
        target_time = frame.apply(target).t
        return all(frame.apply(e).t < target_time - tolerance for e in info_events)
    if frame is not None:
        target, info_events = frame.apply(target), [frame.apply(e) for e in info_events]
    if kind == Criterion.ER2:
        region = backward_cone(target)
    else:
        region = outside_forward_cone(target)
    return all(region.contains(e, tolerance) for e in info_events)


def gated_assignment(
    kind: Criterion | str,
    geometry: HardyGeometry | None = None,
    frame: LorentzBoost | None = None,
    joint_region: NonlocalKind | str = NonlocalKind.UNION,
    experiment: HardyExperiment | None = None,
    tolerance: float = STATE_TOLERANCE,
) -> RealityAssignment:
    """
    Attribute ``f(U+)``, ``f(U-)`` and ``f(U+U-)`` on the basis after P, each value
    gated by the criterion ``kind``. A value is attributed only if the
    detection it is inferred from is admissible and makes it certain.
    """
    kind = to_criterion(kind)
    geometry = geometry or HardyGeometry()
    experiment = experiment or HardyExperiment()
    if kind == Criterion.ER1 and frame is None:
        raise CriterionException("ER1 compares times and needs a Lorentz frame")
    u_plus = experiment.projector(ExperimentStage.AFTER_P, "U+")
    u_minus = experiment.projector(ExperimentStage.AFTER_P, "U-")
    joint = u_plus.product(u_minus)
    assignment = RealityAssignment()
    # f(U+) is measured as the positron reaches BS2+ and inferred from D-
    for observable, detector, stage, target in (
        (u_plus, "D-", ExperimentStage.AFTER_BS2_MINUS, "BS2+"),
        (u_minus, "D+", ExperimentStage.AFTER_BS2_PLUS, "BS2-"),
    ):
        value = None
        if er_criterion(kind, [geometry[detector]], geometry[target], frame, tolerance):
            value = certain_value(
                experiment.conditional_probability(
                    stage,
                    experiment.projector(stage, observable.name),
                    experiment.projector(stage, detector),
                )
            )
        assignment.set_value(observable, value)
    joint_value = None
    if kind == Criterion.ER3:
        region = geometry.region(to_nonlocal_kind(joint_region))
        detectors = [geometry[d] for d in ("D+", "D-")]
        if frame is not None:
            region, detectors = region.boost(frame), [frame.apply(d) for d in detectors]
        if all(region.contains(d, tolerance) for d in detectors):
            ensemble = hardy_ensemble("d+d-", ExperimentStage.AFTER_P, experiment)
            joint_value = certain_value(
                abl_probability(ensemble, ProjectorFamily.binary(joint), 0)
            )
            assignment.counterfactual = True
    assignment.set_value(joint, joint_value)
    if logger.isEnabledFor(logging.INFO):
        frame_name = f" in frame beta = {frame.beta:g}" if frame else ""
        logger.info(
            f"ASSIGNED under {kind.value}{frame_name}: "
            + ", ".join(f"f({k.name}) = {v}" for k, v in assignment.values.items())
        )
    return assignment


def li1_check(
    assignments_per_frame: MutableMapping[str, RealityAssignment],
    observable: Projector | str,
) -> bool:
    """Whether ``observable`` receives the same value in every frame."""
    values = set()
    for frame, assignment in assignments_per_frame.items():
        value = (
            assignment.value_by_name(observable)
            if isinstance(observable, str)
            else assignment.value_of(observable)
        )
        if value is None:
            name = observable if isinstance(observable, str) else observable.name
            raise MissingAssignmentException(
                f"Observable {name} has no element of reality in frame {frame}",
                frame=frame,
            )
        values.add(value)
    return len(values) <= 1


class AharonovAlbertScenario:
    """
    A singlet checked by non-demolition measurements at ``t = -epsilon`` on both
    wings, which sit at ``x = -separation`` and ``x = +separation``, followed by
    a z-spin measurement of the left particle at ``t0``.
    """

    __slots__ = ("epsilon", "separation", "t0", "checks", "measurement", "region")

    def __init__(self, epsilon: float, separation: float, t0: float):
        if epsilon <= 0 or separation <= 0:
            raise CausalException(
                "Aharonov-Albert needs positive epsilon and separation, got "
                f"epsilon = {epsilon}, separation = {separation}"
            )
        if t0 <= -epsilon:
            raise CausalException(
                f"The z-spin measurement at t0 = {t0} must follow the checks at t = {-epsilon}"
            )
        self.epsilon: float = epsilon
        self.separation: float = separation
        self.t0: float = t0
        self.checks: tuple[SpacetimeEvent, SpacetimeEvent] = (
            SpacetimeEvent(-epsilon, -separation, "check-left"),
            SpacetimeEvent(-epsilon, separation, "check-right"),
        )
        self.measurement: SpacetimeEvent = SpacetimeEvent(t0, -separation, "z-left")
        self.region: CausalRegion = hellwig_kraus_validity(
            self.checks, [self.measurement]
        )

    def default_queries(self) -> MutableSequence[SpacetimeEvent]:
        return [
            *self.checks,
            SpacetimeEvent(
                (self.t0 - self.epsilon) / 2, -self.separation, "left-before-z"
            ),
            SpacetimeEvent(self.t0, self.separation, "right-at-t0"),
            self.measurement,
        ]

    def verdicts(
        self,
        queries: Iterable[SpacetimeEvent] | None = None,
        tolerance: float = STATE_TOLERANCE,
    ) -> MutableMapping[str, bool]:
        """Whether the singlet is still attributed at each query event."""
        queries = self.default_queries() if queries is None else queries
        return {
            e.label or f"({e.t:g}, {e.x:g})": self.region.contains(e, tolerance)
            for e in queries
        }


def aharonov_albert(
    epsilon: float = 0.1, separation: float = 1.0, t0: float = 0.0
) -> AharonovAlbertScenario:
    return AharonovAlbertScenario(epsilon, separation, t0)
