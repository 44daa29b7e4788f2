from hardylab.prodrule.classify import (
    CaseReport,
    ProofStep,
    case_derivation_trace,
    classify_on_projectors,
)
from hardylab.prodrule.function import (
    Case2,
    Case3,
    Const0,
    Const1,
    ExplicitLattice,
    ProductRuleFunction,
    ProductRuleTrialReport,
    check_product_rule,
    evaluate,
    function_classes,
    function_from_config,
    random_product_rule_trials,
)
from hardylab.prodrule.lattice import (
    brute_force_lattice_assignments,
    enumerate_lattice_assignments,
    enumerate_lattice_assignments_async,
    uniqueness_theorem_check,
)
from hardylab.prodrule.operator import DiagonalOperator, DiagonalProjector

__all__ = [
    "Case2",
    "Case3",
    "CaseReport",
    "Const0",
    "Const1",
    "DiagonalOperator",
    "DiagonalProjector",
    "ExplicitLattice",
    "ProductRuleFunction",
    "ProductRuleTrialReport",
    "ProofStep",
    "brute_force_lattice_assignments",
    "case_derivation_trace",
    "check_product_rule",
    "classify_on_projectors",
    "enumerate_lattice_assignments",
    "enumerate_lattice_assignments_async",
    "evaluate",
    "function_classes",
    "function_from_config",
    "random_product_rule_trials",
    "uniqueness_theorem_check",
]
