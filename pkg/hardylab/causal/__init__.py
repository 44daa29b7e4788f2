from hardylab.causal.criteria import (
    AharonovAlbertScenario,
    Criterion,
    HardyGeometry,
    aharonov_albert,
    er_criterion,
    gated_assignment,
    li1_check,
)
from hardylab.causal.geometry import (
    IntervalClass,
    LorentzBoost,
    SpacetimeEvent,
    boost,
    interval,
)
from hardylab.causal.region import (
    CausalRegion,
    Complement,
    ConeDirection,
    ConeRegion,
    ConeSide,
    Intersection,
    NonlocalKind,
    Spacetime,
    Union,
    hellwig_kraus_validity,
    nonlocal_region,
    region_membership,
)

__all__ = [
    "AharonovAlbertScenario",
    "CausalRegion",
    "Complement",
    "ConeDirection",
    "ConeRegion",
    "ConeSide",
    "Criterion",
    "HardyGeometry",
    "Intersection",
    "IntervalClass",
    "LorentzBoost",
    "NonlocalKind",
    "Spacetime",
    "SpacetimeEvent",
    "Union",
    "aharonov_albert",
    "boost",
    "er_criterion",
    "gated_assignment",
    "hellwig_kraus_validity",
    "interval",
    "li1_check",
    "nonlocal_region",
    "region_membership",
]
