from hardylab.abl.reality import (
    ProductRuleViolation,
    RealityAssignment,
    assign_elements,
    audit_product_rule,
    certain_value,
    eigenvalue_assignment,
)
from hardylab.abl.rule import (
    PrePostEnsemble,
    ProjectorFamily,
    abl_probabilities,
    abl_probability,
    back_evolve,
    hardy_ensemble,
)

__all__ = [
    "PrePostEnsemble",
    "ProductRuleViolation",
    "ProjectorFamily",
    "RealityAssignment",
    "abl_probabilities",
    "abl_probability",
    "assign_elements",
    "audit_product_rule",
    "back_evolve",
    "certain_value",
    "eigenvalue_assignment",
    "hardy_ensemble",
]
