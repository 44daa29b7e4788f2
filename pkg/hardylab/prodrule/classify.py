from __future__ import annotations

import logging
from typing import Any, MutableMapping, MutableSequence

import numpy as np

from hardylab.core.context import PRODRULE_TOLERANCE
from hardylab.core.exception import NotAProjectorException, ProductRuleException
from hardylab.core.utils import resolve_seed
from hardylab.log_handler import logger
from hardylab.prodrule.function import (
    Case2,
    Const1,
    ProductRuleFunction,
    all_subsets,
)
from hardylab.prodrule.operator import DiagonalOperator, DiagonalProjector


class CaseReport:
    """Where a function falls among the three collections of rank-1 projector values."""

    __slots__ = ("n", "case", "singletons", "unique_singleton", "minimal_projectors")

    def __init__(
        self,
        n: int,
        case: int,
        singletons: MutableSequence[float],
        unique_singleton: int | None,
        minimal_projectors: MutableSequence[frozenset[int]],
    ):
        self.n: int = n
        self.case: int = case
        self.singletons: MutableSequence[float] = singletons
        self.unique_singleton: int | None = unique_singleton
        self.minimal_projectors: MutableSequence[frozenset[int]] = minimal_projectors

    @property
    def is_zero(self) -> bool:
        """Case 3 with no projector valued 1, i.e. ``f`` vanishes on the lattice."""
        return self.case == 3 and not self.minimal_projectors

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "n": self.n,
            "case": self.case,
            "singletons": list(self.singletons),
            "unique_singleton": self.unique_singleton,
            "minimal_projectors": [sorted(p) for p in self.minimal_projectors],
            "is_zero": self.is_zero,
        }


def _projector_value(f: ProductRuleFunction, projector: DiagonalProjector) -> float:
    value = f.evaluate(projector)
    if value not in (0.0, 1.0):
        raise NotAProjectorException(
            f"{f!r} takes the value {value} on {projector.name}, "
            "so it cannot satisfy the product rule"
        )
    return float(value)


def classify_on_projectors(f: ProductRuleFunction, n: int) -> CaseReport:
    singletons = [
        _projector_value(f, DiagonalProjector(n, [k])) for k in range(1, n + 1)
    ]
    ones = [k + 1 for k, v in enumerate(singletons) if v == 1.0]
    minimal_projectors = []
    if len(ones) == n:
        case = 1
    elif ones:
        case = 2
    else:
        case = 3
        for subset in all_subsets(n)[n + 1 :]:
            if minimal_projectors and len(subset) > len(minimal_projectors[0]):
                break
            if _projector_value(f, DiagonalProjector(n, subset)) == 1.0:
                minimal_projectors.append(subset)
    report = CaseReport(
        n,
        case,
        singletons,
        ones[0] if len(ones) == 1 else None,
        minimal_projectors,
    )
    if case == 2 and report.unique_singleton is None:
        if logger.isEnabledFor(logging.WARNING):
            logger.warning(
                f"VIOLATION: {f!r} is 1 on the projectors {ones}, "
                "the product rule allows only one"
            )
    return report


class ProofStep:
    """One identity of a derivation, instantiated on concrete operators."""

    __slots__ = ("identity", "lhs", "rhs", "holds")

    def __init__(
        self,
        identity: str,
        lhs: float,
        rhs: float,
        tolerance: float = PRODRULE_TOLERANCE,
    ):
        self.identity: str = identity
        self.lhs: float = float(lhs)
        self.rhs: float = float(rhs)
        self.holds: bool = bool(abs(lhs - rhs) <= tolerance * max(1.0, abs(rhs)))

    def __repr__(self):
        return f"ProofStep({self.identity}: {self.lhs:g} = {self.rhs:g})"

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "identity": self.identity,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }


def _scaled(n: int, index: int, value: float) -> DiagonalOperator:
    lambdas = np.zeros(n)
    lambdas[index - 1] = value
    return DiagonalOperator(lambdas)


def _const1_trace(
    f: ProductRuleFunction, n: int, lambda_j: float, h: DiagonalOperator
) -> list[ProofStep]:
    ev = f.evaluate
    i, j = 1, 2
    p_i, p_j = DiagonalProjector(n, [i]), DiagonalProjector(n, [j])
    k = DiagonalOperator(p_i.lambdas + lambda_j * p_j.lambdas)
    scaled_j = _scaled(n, j, lambda_j)
    steps = [
        ProofStep(
            f"f(K) = f(K) f(P{i}) with K = P{i} + {lambda_j:g} P{j}",
            ev(k),
            ev(k) * ev(p_i),
        ),
        ProofStep(f"f(K) f(P{i}) = f(K P{i})", ev(k) * ev(p_i), ev(k * p_i)),
        ProofStep(f"f(K P{i}) = f(P{i}) = 1", ev(k * p_i), 1.0),
        ProofStep(f"f(K) = f(K P{j})", ev(k), ev(k * p_j)),
        ProofStep(f"f(K P{j}) = f({lambda_j:g} P{j})", ev(k * p_j), ev(scaled_j)),
        ProofStep(f"f({lambda_j:g} P{j}) = 1", ev(scaled_j), 1.0),
    ]
    if nonzero := sorted(h.support()):
        m = nonzero[0]
        p_m = DiagonalProjector(n, [m])
        steps.extend(
            [
                ProofStep(f"f(H) = f(H P{m})", ev(h), ev(h * p_m)),
                ProofStep(f"f(H P{m}) = f(lambda_{m} P{m}) = 1", ev(h * p_m), 1.0),
            ]
        )
    steps.append(
        ProofStep(
            f"f(0) = f(P{i} P{j}) = f(P{i}) f(P{j})", ev(p_i * p_j), ev(p_i) * ev(p_j)
        )
    )
    return steps


def _case2_trace(
    f: Case2, n: int, h: DiagonalOperator, h2: DiagonalOperator
) -> list[ProofStep]:
    ev = f.evaluate
    i = f.i
    p_i = DiagonalProjector(n, [i])
    lambda_i, lambda2_i = h.eigenvalue(i), h2.eigenvalue(i)
    scaled, scaled2 = _scaled(n, i, lambda_i), _scaled(n, i, lambda2_i)
    steps = [
        ProofStep(f"f(H) = f(H) f(P{i})", ev(h), ev(h) * ev(p_i)),
        ProofStep(f"f(H) f(P{i}) = f(H P{i})", ev(h) * ev(p_i), ev(h * p_i)),
        ProofStep(f"f(H P{i}) = f(lambda_{i} P{i})", ev(h * p_i), ev(scaled)),
        ProofStep(
            f"f(lambda_{i} P{i}) f(lambda'_{i} P{i}) = f(lambda_{i} lambda'_{i} P{i})",
            ev(scaled) * ev(scaled2),
            ev(_scaled(n, i, lambda_i * lambda2_i)),
        ),
        ProofStep(f"f(P{i}) f(P{i}) = f(P{i})", ev(p_i) * ev(p_i), ev(p_i)),
    ]
    for j in range(1, n + 1):
        if j != i:
            p_j = DiagonalProjector(n, [j])
            steps.append(
                ProofStep(f"f(P{j}) = f(P{i} P{j}) = f(0) = 0", ev(p_j), ev(p_i * p_j))
            )
    return steps


def case_derivation_trace(
    f: ProductRuleFunction,
    n: int = 3,
    seed: int | None = None,
    lambda_j: float = 3.0,
) -> list[ProofStep]:
    """
    Instantiate the derivation of the constant and single-index solutions on
    random spectra drawn with ``seed``.
    """
    rng = np.random.default_rng(resolve_seed(seed))
    h, h2 = (DiagonalOperator(rng.uniform(-2.0, 2.0, n)) for _ in range(2))
    if isinstance(f, Const1):
        steps = _const1_trace(f, n, lambda_j, h)
    elif isinstance(f, Case2):
        steps = _case2_trace(f, n, h, h2)
    else:
        raise ProductRuleException(
            f"Derivation traces exist for the constant 1 and single-index cases, not {f.case}"
        )
    if failed := [s for s in steps if not s.holds]:
        if logger.isEnabledFor(logging.WARNING):
            logger.warning(f"FAILED derivation steps for {f!r}: {failed}")
    elif logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"VERIFIED {len(steps)} derivation steps for {f!r}")
    return steps
