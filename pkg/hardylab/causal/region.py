from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Iterable, MutableMapping, MutableSequence

from hardylab.causal.geometry import LorentzBoost, SpacetimeEvent
from hardylab.core.context import STATE_TOLERANCE
from hardylab.core.exception import CausalException, EmptyApexException


class ConeDirection(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class ConeSide(Enum):
    INTERIOR = "interior"
    EXTERIOR = "exterior"


class NonlocalKind(Enum):
    UNION = "union"
    INTERSECTION = "intersection"


class CausalRegion(ABC):
    """
    A set of events built from light cones. Every region is closed under
    boosts: boosting a region boosts the apexes of its cones.
    """

    __slots__ = ()

    def __and__(self, other: CausalRegion) -> CausalRegion:
        return Intersection([self, other])

    def __invert__(self) -> CausalRegion:
        return Complement(self)

    def __or__(self, other: CausalRegion) -> CausalRegion:
        return Union([self, other])

    @abstractmethod
    def boost(self, b: LorentzBoost) -> CausalRegion:
        ...

    @abstractmethod
    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        ...

    @abstractmethod
    def to_dict(self) -> MutableMapping[str, Any]:
        ...


class ConeRegion(CausalRegion):
    """
    The interior or exterior of the forward or backward light cone of ``apex``.
    Both are closed: the cone surface belongs to the interior and to the exterior.
    """

    __slots__ = ("apex", "direction", "side")

    def __init__(
        self,
        apex: SpacetimeEvent,
        direction: ConeDirection = ConeDirection.FORWARD,
        side: ConeSide = ConeSide.INTERIOR,
    ):
        self.apex: SpacetimeEvent = apex
        self.direction: ConeDirection = direction
        self.side: ConeSide = side

    def __repr__(self):
        return (
            f"ConeRegion({self.side.value} of {self.direction.value} "
            f"cone at {self.apex!r})"
        )

    def boost(self, b: LorentzBoost) -> CausalRegion:
        return ConeRegion(b.apply(self.apex), self.direction, self.side)

    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        dt = e.t - self.apex.t
        if self.direction == ConeDirection.BACKWARD:
            dt = -dt
        dx = abs(e.x - self.apex.x)
        if self.side == ConeSide.INTERIOR:
            return dt >= dx - tolerance
        else:
            return dt <= dx + tolerance

    def to_dict(self) -> MutableMapping[str, Any]:
        return {
            "type": "cone",
            "apex": self.apex.to_json(),
            "direction": self.direction.value,
            "side": self.side.value,
        }


class Complement(CausalRegion):
    __slots__ = ("operand",)

    def __init__(self, operand: CausalRegion):
        self.operand: CausalRegion = operand

    def boost(self, b: LorentzBoost) -> CausalRegion:
        return Complement(self.operand.boost(b))

    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        return not self.operand.contains(e, tolerance)

    def to_dict(self) -> MutableMapping[str, Any]:
        return {"type": "complement", "operand": self.operand.to_dict()}


class Intersection(CausalRegion):
    __slots__ = ("operands",)

    def __init__(self, operands: Iterable[CausalRegion]):
        self.operands: tuple[CausalRegion, ...] = tuple(operands)

    def boost(self, b: LorentzBoost) -> CausalRegion:
        return Intersection(r.boost(b) for r in self.operands)

    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        return all(r.contains(e, tolerance) for r in self.operands)

    def to_dict(self) -> MutableMapping[str, Any]:
        return {
            "type": "intersection",
            "operands": [r.to_dict() for r in self.operands],
        }


class Spacetime(CausalRegion):
    __slots__ = ()

    def boost(self, b: LorentzBoost) -> CausalRegion:
        return self

    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        return True

    def to_dict(self) -> MutableMapping[str, Any]:
        return {"type": "spacetime"}


class Union(CausalRegion):
    __slots__ = ("operands",)

    def __init__(self, operands: Iterable[CausalRegion]):
        self.operands: tuple[CausalRegion, ...] = tuple(operands)

    def boost(self, b: LorentzBoost) -> CausalRegion:
        return Union(r.boost(b) for r in self.operands)

    def contains(self, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE) -> bool:
        return any(r.contains(e, tolerance) for r in self.operands)

    def to_dict(self) -> MutableMapping[str, Any]:
        return {"type": "union", "operands": [r.to_dict() for r in self.operands]}


def backward_cone(apex: SpacetimeEvent) -> ConeRegion:
    return ConeRegion(apex, ConeDirection.BACKWARD, ConeSide.INTERIOR)


def forward_cone(apex: SpacetimeEvent) -> ConeRegion:
    return ConeRegion(apex, ConeDirection.FORWARD, ConeSide.INTERIOR)


def outside_forward_cone(apex: SpacetimeEvent) -> ConeRegion:
    return ConeRegion(apex, ConeDirection.FORWARD, ConeSide.EXTERIOR)


def region_membership(
    r: CausalRegion, e: SpacetimeEvent, tolerance: float = STATE_TOLERANCE
) -> bool:
    return r.contains(e, tolerance)


def to_nonlocal_kind(kind: NonlocalKind | str) -> NonlocalKind:
    try:
        return kind if isinstance(kind, NonlocalKind) else NonlocalKind(kind)
    except ValueError:
        raise CausalException(
            f"Unknown region kind {kind!r}, expected one of "
            f"{[k.value for k in NonlocalKind]}"
        ) from None


def nonlocal_region(
    kind: NonlocalKind | str, apexes: Iterable[SpacetimeEvent]
) -> CausalRegion:
    """
    Combine the exteriors of the forward cones of ``apexes``. For two measurement
    events the union is the region where information about either outcome
    may come from without reaching the other, the intersection the region
    that is outside both cones.
    """
    kind = to_nonlocal_kind(kind)
    exteriors: MutableSequence[CausalRegion] = [
        outside_forward_cone(apex) for apex in apexes
    ]
    if not exteriors:
        raise EmptyApexException(f"A {kind.value} region needs at least one apex")
    return Union(exteriors) if kind == NonlocalKind.UNION else Intersection(exteriors)


def hellwig_kraus_validity(
    preparation: Iterable[SpacetimeEvent], collapses: Iterable[SpacetimeEvent]
) -> CausalRegion:
    """
    Region where a state prepared at ``preparation`` is still attributed when the
    measurements at ``collapses`` reduce it along their backward light cones.
    """
    preparation, collapses = list(preparation), list(collapses)
    future: CausalRegion = (
        Union(forward_cone(e) for e in preparation) if preparation else Spacetime()
    )
    if not collapses:
        return future
    return future & ~Union(backward_cone(e) for e in collapses)
