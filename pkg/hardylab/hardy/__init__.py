from hardylab.hardy.experiment import (
    BS1,
    BS2,
    ExperimentStage,
    HardyExperiment,
    HardyState,
    arm_map,
    build_stage_maps,
    conditional_probability,
    evolve_to,
    outcome_probability,
)

__all__ = [
    "BS1",
    "BS2",
    "ExperimentStage",
    "HardyExperiment",
    "HardyState",
    "arm_map",
    "build_stage_maps",
    "conditional_probability",
    "evolve_to",
    "outcome_probability",
]
