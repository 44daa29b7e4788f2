from __future__ import annotations

import math
from enum import Enum
from typing import Any, MutableMapping

import numpy as np

from hardylab.core.context import STATE_TOLERANCE
from hardylab.core.exception import CausalException, InvalidBoostException


class IntervalClass(Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


class SpacetimeEvent:
    """A point of 1+1 Minkowski spacetime in units where c = 1."""

    __slots__ = ("t", "x", "label")

    def __init__(self, t: float, x: float, label: str | None = None):
        if not (math.isfinite(t) and math.isfinite(x)):
            raise CausalException(
                f"Event {label or ''} has non-finite coordinates ({t}, {x})"
            )
        self.t: float = float(t)
        self.x: float = float(x)
        self.label: str | None = label

    def __eq__(self, other):
        if not isinstance(other, SpacetimeEvent):
            return False
        return (self.t, self.x, self.label) == (other.t, other.x, other.label)

    def __hash__(self):
        return hash((self.t, self.x, self.label))

    def __repr__(self):
        name = f"{self.label}=" if self.label else ""
        return f"SpacetimeEvent({name}({self.t:g}, {self.x:g}))"

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> SpacetimeEvent:
        return cls(value["t"], value["x"], value.get("label"))

    def relabel(self, label: str | None) -> SpacetimeEvent:
        return SpacetimeEvent(self.t, self.x, label)

    def to_json(self) -> MutableMapping[str, Any]:
        value = {"t": self.t, "x": self.x}
        if self.label is not None:
            value["label"] = self.label
        return value


class LorentzBoost:
    """A boost to the frame moving with velocity ``beta`` along x."""

    __slots__ = ("beta", "gamma")

    def __init__(self, beta: float):
        if not math.isfinite(beta) or abs(beta) >= 1.0:
            raise InvalidBoostException(
                f"A boost needs |beta| < 1, got beta = {beta}"
            )
        self.beta: float = float(beta)
        self.gamma: float = 1.0 / math.sqrt(1.0 - self.beta**2)

    def __eq__(self, other):
        if not isinstance(other, LorentzBoost):
            return False
        return self.beta == other.beta

    def __hash__(self):
        return hash(self.beta)

    def __repr__(self):
        return f"LorentzBoost(beta={self.beta:g})"

    @property
    def matrix(self) -> np.ndarray:
        return self.gamma * np.array([[1.0, -self.beta], [-self.beta, 1.0]])

    def apply(self, e: SpacetimeEvent) -> SpacetimeEvent:
        t, x = self.matrix @ np.array([e.t, e.x])
        return SpacetimeEvent(float(t), float(x), e.label)

    def compose(self, other: LorentzBoost) -> LorentzBoost:
        """Return the boost equivalent to applying ``other`` and then ``self``."""
        return LorentzBoost(
            (self.beta + other.beta) / (1.0 + self.beta * other.beta)
        )

    def inverse(self) -> LorentzBoost:
        return LorentzBoost(-self.beta)


def boost(b: LorentzBoost, e: SpacetimeEvent) -> SpacetimeEvent:
    return b.apply(e)


def interval(
    a: SpacetimeEvent, b: SpacetimeEvent, tolerance: float = STATE_TOLERANCE
) -> tuple[float, IntervalClass]:
    value = (b.x - a.x) ** 2 - (b.t - a.t) ** 2
    if abs(value) <= tolerance:
        return value, IntervalClass.LIGHTLIKE
    elif value < 0:
        return value, IntervalClass.TIMELIKE
    else:
        return value, IntervalClass.SPACELIKE
