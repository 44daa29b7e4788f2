from __future__ import annotations


class HardyLabException(Exception):
    ...


class ScenarioDefinitionException(HardyLabException):
    ...


class StateSpaceException(HardyLabException):
    ...


class BasisMismatchException(StateSpaceException):
    ...


class ZeroVectorException(StateSpaceException):
    ...


class NonIsometricMapException(StateSpaceException):
    ...


class InvalidProjectorException(StateSpaceException):
    ...


class ExperimentException(HardyLabException):
    ...


class IllegalProjectorException(ExperimentException):
    ...


class ZeroProbabilityConditionException(ExperimentException):
    ...


class PostSelectionException(HardyLabException):
    ...


class PostSelectionIncompatibleException(PostSelectionException):
    ...


class CausalException(HardyLabException):
    ...


class InvalidBoostException(CausalException):
    ...


class CriterionException(CausalException):
    ...


class EmptyApexException(CausalException):
    ...


class MissingAssignmentException(CausalException):
    def __init__(self, message: str, frame: str | None = None):
        super().__init__(message)
        self.frame: str | None = frame


class ProductRuleException(HardyLabException):
    ...


class DimensionMismatchException(ProductRuleException):
    ...


class NotAProjectorException(ProductRuleException):
    ...


class LatticeRangeException(ProductRuleException):
    ...
