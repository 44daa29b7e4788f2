from __future__ import annotations

import logging
import math
from enum import Enum
from typing import Iterable, MutableMapping, MutableSequence

from hardylab.core.exception import (
    ExperimentException,
    IllegalProjectorException,
    InvalidProjectorException,
    StateSpaceException,
    ZeroProbabilityConditionException,
)
from hardylab.log_handler import logger
from hardylab.statespace import (
    ELECTRON,
    GAMMA,
    POSITRON,
    LinearMap,
    ModeLabel,
    Projector,
    StateVector,
    apply,
    observable_projector,
    project,
)

SQRT2 = math.sqrt(2.0)
ZERO_PROBABILITY = 1e-15

# Single-particle optical elements, as path -> {path: amplitude}
BS1 = {"s": {"u": 1j / SQRT2, "v": 1 / SQRT2}}
BS2 = {"u": {"c": 1 / SQRT2, "d": 1j / SQRT2}, "v": {"c": 1j / SQRT2, "d": 1 / SQRT2}}
DIRECT_ROUTING = {"u": {"c": 1.0}, "v": {"d": 1.0}}


class ExperimentStage(Enum):
    INITIAL = "initial"
    AFTER_P = "after_p"
    AFTER_BS2_MINUS = "after_bs2_minus"
    AFTER_BS2_PLUS = "after_bs2_plus"
    AFTER_BOTH = "after_both"


STAGE_PREDECESSORS: MutableMapping[ExperimentStage, tuple[ExperimentStage, ...]] = {
    ExperimentStage.INITIAL: (),
    ExperimentStage.AFTER_P: (ExperimentStage.INITIAL,),
    ExperimentStage.AFTER_BS2_MINUS: (ExperimentStage.AFTER_P,),
    ExperimentStage.AFTER_BS2_PLUS: (ExperimentStage.AFTER_P,),
    ExperimentStage.AFTER_BOTH: (
        ExperimentStage.AFTER_BS2_MINUS,
        ExperimentStage.AFTER_BS2_PLUS,
    ),
}

# Paths a positron and an electron may occupy at each stage
_LEGAL_PATHS: MutableMapping[ExperimentStage, tuple[str, str]] = {
    ExperimentStage.INITIAL: ("s", "s"),
    ExperimentStage.AFTER_P: ("uv", "uv"),
    ExperimentStage.AFTER_BS2_MINUS: ("uv", "cd"),
    ExperimentStage.AFTER_BS2_PLUS: ("cd", "uv"),
    ExperimentStage.AFTER_BOTH: ("cd", "cd"),
}


def arm_map(
    domain: Iterable[ModeLabel | str],
    particle: str,
    transformation: MutableMapping[str, MutableMapping[str, complex]],
    name: str = "",
) -> LinearMap:
    """
    Lift a single-particle optical element acting on ``particle`` to the joint basis.
    Modes of the other particle, paths the element does not touch and the
    annihilation photon pass through unchanged.
    """

    def action(label: ModeLabel) -> MutableMapping[ModeLabel, complex]:
        if label.is_gamma:
            return {label: 1.0}
        mode = label.particle_mode(particle)
        if mode is None or mode[0] not in transformation:
            return {label: 1.0}
        return {
            label.replace(particle, path + particle): amplitude
            for path, amplitude in transformation[mode[0]].items()
        }

    return LinearMap.from_action(domain, action, name)


def annihilation_map(domain: Iterable[ModeLabel | str]) -> LinearMap:
    pair = ModeLabel("u+", "u-")
    gamma = ModeLabel(GAMMA)
    domain = list(domain)
    return LinearMap.from_action(
        domain,
        lambda label: {gamma: 1.0} if label == pair else {label: 1.0},
        name="P",
        codomain=domain + [gamma],
    )


def to_stage(stage: ExperimentStage | str) -> ExperimentStage:
    try:
        return ExperimentStage(stage)
    except ValueError:
        raise ExperimentException(
            f"Unknown stage {stage!r}, expected one of "
            f"{[s.value for s in ExperimentStage]}"
        ) from None


class HardyState:
    __slots__ = ("stage", "state")

    def __init__(self, stage: ExperimentStage, state: StateVector):
        if not state.is_normalized():
            raise ExperimentException(
                f"State at stage {stage.value} is not normalized (norm² = {state.norm2()})"
            )
        positron_paths, electron_paths = _LEGAL_PATHS[stage]
        for label in state.basis:
            if label.is_gamma:
                continue
            positron, electron = label.particle_mode(POSITRON), label.particle_mode(
                ELECTRON
            )
            if (
                positron is None
                or electron is None
                or positron[0] not in positron_paths
                or electron[0] not in electron_paths
            ):
                raise ExperimentException(
                    f"Label {label} is not legal at stage {stage.value}"
                )
        self.stage: ExperimentStage = stage
        self.state: StateVector = state

    def __repr__(self):
        return f"HardyState({self.stage.value}, {self.state!r})"


class HardyExperiment:
    """
    The two overlapping Mach-Zehnder interferometers, one for positrons and one
    for electrons. Intermediate frame-dependent snapshots are partial
    applications of the BS2 maps; no free evolution happens between optical
    elements and mirrors contribute no phase.
    """

    def __init__(self, bs2_plus_present: bool = True, bs2_minus_present: bool = True):
        self.bs2_plus_present: bool = bs2_plus_present
        self.bs2_minus_present: bool = bs2_minus_present
        self.initial_state: StateVector = StateVector.basis_state(["s+s-"], "s+s-")
        bs1_plus = arm_map(self.initial_state.basis, POSITRON, BS1)
        self.bs1: LinearMap = (
            arm_map(bs1_plus.codomain, ELECTRON, BS1).compose(bs1_plus).renamed("BS1")
        )
        self.annihilation: LinearMap = annihilation_map(self.bs1.codomain)
        after_p = self.annihilation.codomain
        self.bs2_minus: LinearMap = arm_map(
            after_p, ELECTRON, self._bs2(ELECTRON), "BS2-"
        )
        self.bs2_plus: LinearMap = arm_map(
            after_p, POSITRON, self._bs2(POSITRON), "BS2+"
        )
        # The positron arm goes first here, the path through F- is built in maps_between
        self.bs2_both: LinearMap = (
            arm_map(self.bs2_plus.codomain, ELECTRON, self._bs2(ELECTRON))
            .compose(self.bs2_plus)
            .renamed("BS2")
        )

    def _bs2(self, particle: str) -> MutableMapping[str, MutableMapping[str, complex]]:
        present = (
            self.bs2_plus_present if particle == POSITRON else self.bs2_minus_present
        )
        return BS2 if present else DIRECT_ROUTING

    def basis(self, stage: ExperimentStage | str) -> tuple[ModeLabel, ...]:
        stage = to_stage(stage)
        if stage == ExperimentStage.INITIAL:
            return self.initial_state.basis
        return self.maps_between(ExperimentStage.INITIAL, stage)[-1].codomain

    def build_stage_maps(self) -> MutableSequence[LinearMap]:
        return [
            self.bs1,
            self.annihilation,
            self.bs2_minus,
            self.bs2_plus,
            self.bs2_both,
        ]

    def conditional_probability(
        self,
        stage: ExperimentStage | str,
        target: Projector,
        condition: Projector,
    ) -> float:
        state = self.evolve_to(stage)
        self._check_legal(state, target)
        self._check_legal(state, condition)
        _, condition_probability = project(condition, state.state)
        if condition_probability <= ZERO_PROBABILITY:
            raise ZeroProbabilityConditionException(
                f"Condition {condition.name} has zero probability at stage {state.stage.value}"
            )
        try:
            joint = target.product(condition)
        except InvalidProjectorException as e:
            raise IllegalProjectorException(str(e)) from e
        _, joint_probability = project(joint, state.state)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(
                f"P({target.name} and {condition.name}) = {joint_probability}, "
                f"P({condition.name}) = {condition_probability} at {state.stage.value}"
            )
        return min(max(joint_probability / condition_probability, 0.0), 1.0)

    def evolve_to(self, stage: ExperimentStage | str) -> HardyState:
        stage = to_stage(stage)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"EVOLVING |s+s-> to stage {stage.value}")
        state = self.initial_state
        for m in self.maps_between(ExperimentStage.INITIAL, stage):
            state = apply(m, state)
        return HardyState(stage, state)

    def maps_between(
        self, source: ExperimentStage | str, target: ExperimentStage | str
    ) -> MutableSequence[LinearMap]:
        """Forward maps leading from ``source`` to ``target`` along the stage DAG."""
        source, target = to_stage(source), to_stage(target)
        if source == target:
            return []
        if source not in _ancestors(target):
            raise ExperimentException(
                f"Stage {target.value} cannot be reached from stage {source.value}"
            )
        if target == ExperimentStage.AFTER_P:
            return [self.bs1, self.annihilation]
        if target == ExperimentStage.AFTER_BS2_MINUS:
            return self.maps_between(source, ExperimentStage.AFTER_P) + [self.bs2_minus]
        if target == ExperimentStage.AFTER_BS2_PLUS:
            return self.maps_between(source, ExperimentStage.AFTER_P) + [self.bs2_plus]
        # Both beam splitters
        if source == ExperimentStage.AFTER_BS2_MINUS:
            return [
                arm_map(
                    self.bs2_minus.codomain, POSITRON, self._bs2(POSITRON), "BS2+"
                )
            ]
        if source == ExperimentStage.AFTER_BS2_PLUS:
            return [
                arm_map(
                    self.bs2_plus.codomain, ELECTRON, self._bs2(ELECTRON), "BS2-"
                )
            ]
        return self.maps_between(source, ExperimentStage.AFTER_P) + [self.bs2_both]

    def outcome_probability(
        self, stage: ExperimentStage | str, outcome: Projector
    ) -> float:
        state = self.evolve_to(stage)
        self._check_legal(state, outcome)
        return project(outcome, state.state)[1]

    def projector(self, stage: ExperimentStage | str, name: str) -> Projector:
        """Resolve an observable name (``U+``, ``D+D-``, ``gamma``) at ``stage``."""
        stage = to_stage(stage)
        try:
            return observable_projector(self.basis(stage), name)
        except InvalidProjectorException as e:
            raise IllegalProjectorException(
                f"Observable {name!r} is not legal at stage {stage.value}: {e}"
            ) from e

    def label_projector(
        self,
        stage: ExperimentStage | str,
        labels: Iterable[str],
        name: str | None = None,
    ) -> Projector:
        """
        Resolve an outcome label set. Each entry is either a full basis label
        (``d+d-``, ``gamma``) or a single mode (``d+``) standing for every
        label that carries it.
        """
        stage = to_stage(stage)
        basis = self.basis(stage)
        selected = set()
        for text in labels:
            try:
                label = ModeLabel.parse(text)
            except StateSpaceException as e:
                raise IllegalProjectorException(str(e)) from e
            if len(label.modes) == 1 and not label.is_gamma:
                matches = {b for b in basis if b.contains(label.modes[0])}
            else:
                matches = {label} if label in basis else set()
            if not matches:
                raise IllegalProjectorException(
                    f"Outcome {text!r} is not legal at stage {stage.value}"
                )
            selected |= matches
        return Projector(basis, labels=selected, name=name or ",".join(labels))

    def _check_legal(self, state: HardyState, projector: Projector):
        if projector.basis != state.state.basis:
            raise IllegalProjectorException(
                f"Projector {projector.name} is not legal at stage {state.stage.value}"
            )


def _ancestors(stage: ExperimentStage) -> set[ExperimentStage]:
    ancestors = set()
    for predecessor in STAGE_PREDECESSORS[stage]:
        ancestors.add(predecessor)
        ancestors |= _ancestors(predecessor)
    return ancestors


_default_experiment: HardyExperiment | None = None


def _experiment(experiment: HardyExperiment | None) -> HardyExperiment:
    global _default_experiment
    if experiment is not None:
        return experiment
    if _default_experiment is None:
        _default_experiment = HardyExperiment()
    return _default_experiment


def build_stage_maps(
    bs2_plus_present: bool = True, bs2_minus_present: bool = True
) -> MutableSequence[LinearMap]:
    return HardyExperiment(bs2_plus_present, bs2_minus_present).build_stage_maps()


def conditional_probability(
    stage: ExperimentStage | str,
    target: Projector,
    condition: Projector,
    experiment: HardyExperiment | None = None,
) -> float:
    return _experiment(experiment).conditional_probability(stage, target, condition)


def evolve_to(
    stage: ExperimentStage | str, experiment: HardyExperiment | None = None
) -> HardyState:
    return _experiment(experiment).evolve_to(stage)


def outcome_probability(
    stage: ExperimentStage | str,
    outcome: Projector,
    experiment: HardyExperiment | None = None,
) -> float:
    return _experiment(experiment).outcome_probability(stage, outcome)
