from __future__ import annotations

import logging
from typing import Iterable, MutableSequence

import numpy as np

from hardylab.core.context import STATE_TOLERANCE
from hardylab.core.exception import (
    BasisMismatchException,
    InvalidProjectorException,
    NonIsometricMapException,
    PostSelectionException,
    PostSelectionIncompatibleException,
)
from hardylab.hardy import ExperimentStage, HardyExperiment
from hardylab.hardy.experiment import to_stage
from hardylab.log_handler import logger
from hardylab.statespace import LinearMap, Projector, StateVector, apply

ABL_DENOMINATOR_THRESHOLD = 1e-15


class PrePostEnsemble:
    """
    A pre- and post-selected ensemble at an intermediate time. ``pre`` is the
    prepared state evolved forwards, ``post`` the final state evolved backwards.
    """

    __slots__ = ("pre", "post")

    def __init__(self, pre: StateVector, post: StateVector):
        if pre.basis != post.basis:
            raise BasisMismatchException(
                "Pre- and post-selected states must live on the same basis, got "
                f"{[str(b) for b in pre.basis]} and {[str(b) for b in post.basis]}"
            )
        for name, state in (("pre", pre), ("post", post)):
            if not state.is_normalized():
                raise PostSelectionException(
                    f"The {name}-selected state is not normalized (norm² = {state.norm2()})"
                )
        self.pre: StateVector = pre
        self.post: StateVector = post

    def __repr__(self):
        return f"PrePostEnsemble(pre={self.pre!r}, post={self.post!r})"

    def amplitude(self, projector: Projector) -> complex:
        """Return ``<post|P|pre>``."""
        if projector.basis != self.pre.basis:
            raise BasisMismatchException(
                f"Projector {projector.name} does not act on the ensemble basis"
            )
        return complex(
            np.vdot(self.post.amplitudes, projector.matrix @ self.pre.amplitudes)
        )


class ProjectorFamily:
    __slots__ = ("projectors",)

    def __init__(self, projectors: Iterable[Projector]):
        self.projectors: tuple[Projector, ...] = tuple(projectors)
        if not self.projectors:
            raise InvalidProjectorException("A projector family cannot be empty")
        basis = self.projectors[0].basis
        if any(p.basis != basis for p in self.projectors):
            raise BasisMismatchException(
                "All projectors of a family must act on the same basis"
            )
        for i, p in enumerate(self.projectors):
            for q in self.projectors[i + 1 :]:
                if np.any(np.abs(p.matrix @ q.matrix) > STATE_TOLERANCE):
                    raise InvalidProjectorException(
                        f"Projectors {p.name} and {q.name} are not orthogonal"
                    )
        total = sum(p.matrix for p in self.projectors)
        if np.any(np.abs(total - np.eye(len(basis))) > STATE_TOLERANCE):
            raise InvalidProjectorException(
                "Projectors "
                f"{[p.name for p in self.projectors]} do not sum to the identity"
            )

    def __getitem__(self, index: int) -> Projector:
        return self.projectors[index]

    def __iter__(self):
        return iter(self.projectors)

    def __len__(self):
        return len(self.projectors)

    @classmethod
    def binary(cls, projector: Projector) -> ProjectorFamily:
        return cls([projector, projector.complement()])


def abl_probabilities(
    e: PrePostEnsemble, family: ProjectorFamily
) -> MutableSequence[float]:
    weights = [abs(e.amplitude(p)) ** 2 for p in family]
    if (denominator := sum(weights)) <= ABL_DENOMINATOR_THRESHOLD:
        raise PostSelectionIncompatibleException(
            f"Post-selection is incompatible with the family {[p.name for p in family]}: "
            f"the denominator is {denominator}"
        )
    return [min(max(w / denominator, 0.0), 1.0) for w in weights]


def abl_probability(e: PrePostEnsemble, family: ProjectorFamily, i: int) -> float:
    if not 0 <= i < len(family):
        raise PostSelectionException(
            f"Outcome index {i} is out of range for a family of {len(family)} projectors"
        )
    probability = abl_probabilities(e, family)[i]
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"ABL probability of {family[i].name} is {probability}")
    return probability


def back_evolve(post: StateVector, maps: Iterable[LinearMap]) -> StateVector:
    """Evolve ``post`` backwards through ``maps``, given in forward order."""
    for m in reversed(list(maps)):
        if not m.isometric:
            raise NonIsometricMapException(
                f"Cannot evolve backwards through the non-isometric map {m.name!r}"
            )
        post = apply(m.adjoint(), post)
    return post


def hardy_ensemble(
    post_label: str = "d+d-",
    stage: ExperimentStage | str = ExperimentStage.AFTER_P,
    experiment: HardyExperiment | None = None,
) -> PrePostEnsemble:
    """
    Pre-select the source state of the two interferometers and post-select
    the detection ``post_label`` after both second beam splitters.
    """
    experiment = experiment or HardyExperiment()
    stage = to_stage(stage)
    pre = experiment.evolve_to(stage).state
    post = StateVector.basis_state(
        experiment.basis(ExperimentStage.AFTER_BOTH), post_label
    )
    return PrePostEnsemble(
        pre,
        back_evolve(post, experiment.maps_between(stage, ExperimentStage.AFTER_BOTH)),
    )
