from hardylab.statespace.mode import (
    ELECTRON,
    GAMMA,
    POSITRON,
    ModeLabel,
    canonical_basis,
)
from hardylab.statespace.state import (
    LinearMap,
    Projector,
    StateVector,
    apply,
    inner_product,
    mode_projector,
    observable_projector,
    project,
)

__all__ = [
    "ELECTRON",
    "GAMMA",
    "POSITRON",
    "LinearMap",
    "ModeLabel",
    "Projector",
    "StateVector",
    "apply",
    "canonical_basis",
    "inner_product",
    "mode_projector",
    "observable_projector",
    "project",
]
