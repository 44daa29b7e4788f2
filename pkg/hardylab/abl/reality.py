from __future__ import annotations

import logging
from typing import Any, Iterable, MutableMapping, MutableSequence

from hardylab.abl.rule import PrePostEnsemble, ProjectorFamily, abl_probability
from hardylab.core.exception import InvalidProjectorException
from hardylab.log_handler import logger
from hardylab.statespace import Projector, StateVector, project

ASSIGNMENT_TOLERANCE = 1e-10


class RealityAssignment:
    """
    Values ``f(A)`` attributed to observables. An observable mapped to ``None``
    was examined but its value could not be inferred with certainty.
    """

    __slots__ = ("values", "counterfactual")

    def __init__(
        self,
        values: MutableMapping[Projector, float | None] | None = None,
        counterfactual: bool = False,
    ):
        self.values: MutableMapping[Projector, float | None] = dict(values or {})
        self.counterfactual: bool = counterfactual

    def __contains__(self, projector: Projector):
        return self.values.get(projector) is not None

    def __repr__(self):
        return f"RealityAssignment({self.to_json()})"

    def assigned(self) -> MutableMapping[str, float]:
        return {p.name: v for p, v in self.values.items() if v is not None}

    def names(self) -> MutableSequence[str]:
        return [p.name for p in self.values]

    def set_value(self, projector: Projector, value: float | None):
        self.values[projector] = value

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "counterfactual": self.counterfactual,
            "values": {p.name: v for p, v in self.values.items()},
        }

    def unassigned(self) -> MutableSequence[str]:
        return [p.name for p, v in self.values.items() if v is None]

    def value_by_name(self, name: str) -> float | None:
        for projector, value in self.values.items():
            if projector.name == name:
                return value
        return None

    def value_of(self, projector: Projector) -> float | None:
        return self.values.get(projector)


class ProductRuleViolation:
    __slots__ = ("a", "b", "f_a", "f_b", "f_ab")

    def __init__(self, a: str, b: str, f_a: float, f_b: float, f_ab: float):
        self.a: str = a
        self.b: str = b
        self.f_a: float = f_a
        self.f_b: float = f_b
        self.f_ab: float = f_ab

    def __eq__(self, other):
        if not isinstance(other, ProductRuleViolation):
            return False
        return (self.a, self.b, self.f_a, self.f_b, self.f_ab) == (
            other.a,
            other.b,
            other.f_a,
            other.f_b,
            other.f_ab,
        )

    def __hash__(self):
        return hash((self.a, self.b, self.f_a, self.f_b, self.f_ab))

    def __repr__(self):
        return (
            f"ProductRuleViolation(f({self.a})f({self.b}) = {self.f_a * self.f_b}, "
            f"f({self.a}{self.b}) = {self.f_ab})"
        )

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "f_a": self.f_a,
            "f_b": self.f_b,
            "f_ab": self.f_ab,
        }


def certain_value(
    probability: float, tolerance: float = ASSIGNMENT_TOLERANCE
) -> float | None:
    if abs(probability - 1.0) <= tolerance:
        return 1.0
    elif abs(probability) <= tolerance:
        return 0.0
    else:
        return None


def _log_assignment(projector: Projector, value: float | None, rule: str):
    if value is None:
        if logger.isEnabledFor(logging.INFO):
            logger.info(f"UNASSIGNED {projector.name}: {rule} gives no certain value")
    elif logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"ASSIGNED f({projector.name}) = {value:g} by {rule}")


def assign_elements(
    e: PrePostEnsemble,
    observables: Iterable[Projector],
    tolerance: float = ASSIGNMENT_TOLERANCE,
) -> RealityAssignment:
    """Attribute ``f(A)`` wherever the ABL rule makes the outcome of ``A`` certain."""
    assignment = RealityAssignment(counterfactual=True)
    for projector in observables:
        value = certain_value(
            abl_probability(e, ProjectorFamily.binary(projector), 0), tolerance
        )
        _log_assignment(projector, value, "the ABL rule")
        assignment.set_value(projector, value)
    return assignment


def eigenvalue_assignment(
    state: StateVector,
    observables: Iterable[Projector],
    tolerance: float = ASSIGNMENT_TOLERANCE,
) -> RealityAssignment:
    """Attribute ``f(A)`` when ``state`` is an eigenstate of ``A``."""
    assignment = RealityAssignment()
    for projector in observables:
        value = certain_value(project(projector, state)[1], tolerance)
        _log_assignment(projector, value, "the eigenvalue rule")
        assignment.set_value(projector, value)
    return assignment


def audit_product_rule(
    a: RealityAssignment,
    pairs: Iterable[tuple[Projector, Projector]],
    tolerance: float = ASSIGNMENT_TOLERANCE,
) -> MutableSequence[ProductRuleViolation]:
    violations = []
    for p, q in pairs:
        try:
            joint = p.product(q)
        except InvalidProjectorException as e:
            raise InvalidProjectorException(
                f"The product rule needs commuting observables: {e}"
            ) from e
        missing = [x.name for x in (p, q, joint) if a.value_of(x) is None]
        if missing:
            if logger.isEnabledFor(logging.WARNING):
                logger.warning(
                    f"SKIPPED pair ({p.name}, {q.name}): {', '.join(missing)} unassigned"
                )
            continue
        f_a, f_b, f_ab = a.value_of(p), a.value_of(q), a.value_of(joint)
        if abs(f_a * f_b - f_ab) > tolerance:
            joint_name = next(k.name for k in a.values if k == joint)
            violation = ProductRuleViolation(p.name, q.name, f_a, f_b, f_ab)
            if logger.isEnabledFor(logging.WARNING):
                logger.warning(
                    f"VIOLATION of the product rule: f({p.name})f({q.name}) = "
                    f"{f_a * f_b:g} but f({joint_name}) = {f_ab:g}"
                )
            violations.append(violation)
        elif logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"HOLDS product rule for ({p.name}, {q.name})")
    return violations
