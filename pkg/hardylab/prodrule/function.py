from __future__ import annotations

import logging
from abc import abstractmethod
from itertools import combinations
from typing import Any, Iterable, MutableMapping, MutableSequence

import numpy as np

from hardylab.core.context import PRODRULE_TOLERANCE, SchemaEntity
from hardylab.core.exception import (
    DimensionMismatchException,
    ProductRuleException,
)
from hardylab.core.utils import get_schema_path, resolve_seed
from hardylab.log_handler import logger
from hardylab.prodrule.operator import DiagonalOperator, DiagonalProjector

RANDOM_SPECTRUM_BOUND = 2.0


def _signed_power(value: float, alpha: float, signed: bool) -> float:
    if value == 0.0:
        return 0.0
    power = abs(value) ** alpha
    return -power if signed and value < 0 else power


class ProductRuleFunction(SchemaEntity):
    """
    A real function on the maximal commuting set that may satisfy
    ``f(A) f(B) = f(AB)``. When ``n`` is given, only operators of that
    dimension are accepted.
    """

    case: str = ""

    __slots__ = ("n",)

    def __init__(self, n: int | None = None):
        self.n: int | None = n

    def __eq__(self, other):
        if not isinstance(other, ProductRuleFunction):
            return False
        return self.to_json() == other.to_json()

    def __hash__(self):
        return hash(repr(self.to_json()))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_json()})"

    def check_dimension(self, h: DiagonalOperator):
        if self.n is not None:
            h.check_dimension(self.n)

    @abstractmethod
    def evaluate(self, h: DiagonalOperator) -> float:
        ...

    @classmethod
    @abstractmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> ProductRuleFunction:
        ...

    @classmethod
    def get_schema(cls) -> str:
        return get_schema_path(__package__, "schemas", f"{cls.case}.json")

    def to_json(self) -> MutableMapping[str, Any]:
        value = {"case": self.case}
        if self.n is not None:
            value["n"] = self.n
        return value


class Const0(ProductRuleFunction):
    case = "const0"

    __slots__ = ()

    def evaluate(self, h: DiagonalOperator) -> float:
        self.check_dimension(h)
        return 0.0

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> Const0:
        return cls(value.get("n"))


class Const1(ProductRuleFunction):
    case = "const1"

    __slots__ = ()

    def evaluate(self, h: DiagonalOperator) -> float:
        self.check_dimension(h)
        return 1.0

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> Const1:
        return cls(value.get("n"))


class Case2(ProductRuleFunction):
    """``|lambda_i|^alpha``, carrying the sign of ``lambda_i`` when ``signed``."""

    case = "case2"

    __slots__ = ("i", "alpha", "signed")

    def __init__(
        self, i: int, alpha: float = 1.0, signed: bool = False, n: int | None = None
    ):
        super().__init__(n)
        if i < 1 or (n is not None and i > n):
            raise DimensionMismatchException(
                f"Index {i} is out of range{f' for dimension {n}' if n else ''}"
            )
        if alpha < 0:
            raise ProductRuleException(
                f"The exponent must be nonnegative for f to stay finite at 0, got {alpha}"
            )
        self.i: int = i
        self.alpha: float = float(alpha)
        self.signed: bool = signed

    def evaluate(self, h: DiagonalOperator) -> float:
        self.check_dimension(h)
        return _signed_power(h.eigenvalue(self.i), self.alpha, self.signed)

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> Case2:
        return cls(
            value["i"],
            value.get("alpha", 1.0),
            value.get("signed", False),
            value.get("n"),
        )

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            **super().to_json(),
            "i": self.i,
            "alpha": self.alpha,
            "signed": self.signed,
        }


class Case3(ProductRuleFunction):
    """Product of ``|lambda_k|^alpha_k`` over an index set of at least two elements."""

    case = "case3"

    __slots__ = ("indices", "alphas", "signed")

    def __init__(
        self,
        indices: Iterable[int],
        alphas: Iterable[float] | None = None,
        signed: Iterable[bool] | None = None,
        n: int | None = None,
    ):
        super().__init__(n)
        self.indices: tuple[int, ...] = tuple(int(i) for i in indices)
        if len(set(self.indices)) != len(self.indices) or len(self.indices) < 2:
            raise ProductRuleException(
                f"Case 3 needs at least two distinct indices, got {list(self.indices)}"
            )
        if outside := [i for i in self.indices if i < 1 or (n is not None and i > n)]:
            raise DimensionMismatchException(f"Indices {outside} are out of range")
        self.alphas: tuple[float, ...] = (
            tuple(float(a) for a in alphas)
            if alphas is not None
            else (1.0,) * len(self.indices)
        )
        self.signed: tuple[bool, ...] = (
            tuple(bool(s) for s in signed)
            if signed is not None
            else (False,) * len(self.indices)
        )
        if len(self.alphas) != len(self.indices) or len(self.signed) != len(
            self.indices
        ):
            raise ProductRuleException(
                "Case 3 needs one exponent and one sign mode per index"
            )
        if non_positive := [a for a in self.alphas if a <= 0]:
            raise ProductRuleException(
                f"Case 3 exponents must be positive, got {non_positive}"
            )

    def evaluate(self, h: DiagonalOperator) -> float:
        self.check_dimension(h)
        value = 1.0
        for i, alpha, signed in zip(self.indices, self.alphas, self.signed):
            value *= _signed_power(h.eigenvalue(i), alpha, signed)
        return value

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> Case3:
        return cls(
            value["indices"], value.get("alphas"), value.get("signed"), value.get("n")
        )

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            **super().to_json(),
            "indices": list(self.indices),
            "alphas": list(self.alphas),
            "signed": list(self.signed),
        }


class ExplicitLattice(ProductRuleFunction):
    """
    A 0/1 assignment on the projectors of dimension ``n``, given by the index
    subsets whose projector is valued 1. Whether it obeys the product rule is
    checked, not assumed.
    """

    case = "lattice"

    __slots__ = ("ones",)

    def __init__(self, n: int, ones: Iterable[Iterable[int]]):
        super().__init__(n)
        self.ones: frozenset[frozenset[int]] = frozenset(
            frozenset(int(i) for i in subset) for subset in ones
        )
        for subset in self.ones:
            if outside := sorted(i for i in subset if not 1 <= i <= n):
                raise DimensionMismatchException(
                    f"Indices {outside} are out of range for dimension {n}"
                )

    @classmethod
    def principal_filter(cls, n: int, generator: Iterable[int]) -> ExplicitLattice:
        generator = frozenset(generator)
        return cls(n, [s for s in all_subsets(n) if generator <= s])

    @property
    def kind(self) -> str:
        if not self.ones:
            return "const0"
        if len(self.ones) == 2**self.n:
            return "const1"
        if self.ones == ExplicitLattice.principal_filter(self.n, self.generator).ones:
            return "filter"
        return "other"

    @property
    def generator(self) -> frozenset[int] | None:
        """Intersection of the subsets valued 1."""
        if not self.ones:
            return None
        return frozenset.intersection(*self.ones)

    def evaluate(self, h: DiagonalOperator) -> float:
        self.check_dimension(h)
        projector = DiagonalProjector.from_operator(h)
        return 1.0 if projector.subset in self.ones else 0.0

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> ExplicitLattice:
        if "filter" in value:
            return cls.principal_filter(value["n"], value["filter"])
        return cls(value["n"], value["ones"])

    def is_multiplicative(self) -> bool:
        subsets = all_subsets(self.n)
        return all(
            ((a & b) in self.ones) == (a in self.ones and b in self.ones)
            for a in subsets
            for b in subsets
        )

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            **super().to_json(),
            "ones": sorted(sorted(s) for s in self.ones),
        }


def all_subsets(n: int) -> MutableSequence[frozenset[int]]:
    """Subsets of ``{1..n}``, by increasing size and then lexicographically."""
    return [
        frozenset(c)
        for size in range(n + 1)
        for c in combinations(range(1, n + 1), size)
    ]


def evaluate(f: ProductRuleFunction, h: DiagonalOperator) -> float:
    return f.evaluate(h)


def check_product_rule(
    f: ProductRuleFunction,
    a: DiagonalOperator,
    b: DiagonalOperator,
    tolerance: float = PRODRULE_TOLERANCE,
) -> bool:
    a.check_dimension(b)
    f_ab = f.evaluate(a * b)
    return bool(
        abs(f.evaluate(a) * f.evaluate(b) - f_ab) <= tolerance * max(1.0, abs(f_ab))
    )


class ProductRuleTrialReport:
    __slots__ = ("function", "n", "trials", "seed", "failures")

    def __init__(
        self,
        function: ProductRuleFunction,
        n: int,
        trials: int,
        seed: int,
        failures: MutableSequence[tuple[DiagonalOperator, DiagonalOperator]],
    ):
        self.function: ProductRuleFunction = function
        self.n: int = n
        self.trials: int = trials
        self.seed: int = seed
        self.failures: MutableSequence[
            tuple[DiagonalOperator, DiagonalOperator]
        ] = failures

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "function": self.function.to_json(),
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failures": [[a.to_json(), b.to_json()] for a, b in self.failures],
        }


def random_product_rule_trials(
    f: ProductRuleFunction,
    n: int,
    trials: int = 1000,
    seed: int | None = None,
    tolerance: float = PRODRULE_TOLERANCE,
) -> ProductRuleTrialReport:
    """
    Check the product rule on ``trials`` random operator pairs. Spectra are
    drawn uniformly in [-2, 2], or as random projectors for explicit lattices.
    """
    seed = resolve_seed(seed)
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(trials):
        if isinstance(f, ExplicitLattice):
            a, b = (DiagonalOperator(rng.integers(0, 2, n)) for _ in range(2))
        else:
            a, b = (
                DiagonalOperator(
                    rng.uniform(-RANDOM_SPECTRUM_BOUND, RANDOM_SPECTRUM_BOUND, n)
                )
                for _ in range(2)
            )
        if not check_product_rule(f, a, b, tolerance):
            failures.append((a, b))
    if failures:
        if logger.isEnabledFor(logging.WARNING):
            logger.warning(
                f"FAILED product rule for {f!r} on {len(failures)} of {trials} pairs "
                f"(seed {seed})"
            )
    elif logger.isEnabledFor(logging.INFO):
        logger.info(f"HOLDS product rule for {f!r} on {trials} pairs (seed {seed})")
    return ProductRuleTrialReport(f, n, trials, seed, failures)


def function_from_config(config: MutableMapping[str, Any]) -> ProductRuleFunction:
    from hardylab.config.validator import FunctionValidator

    config = FunctionValidator().validate(config)
    return function_classes[config["case"]].from_json(config)


function_classes: MutableMapping[str, type[ProductRuleFunction]] = {
    "const0": Const0,
    "const1": Const1,
    "case2": Case2,
    "case3": Case3,
    "lattice": ExplicitLattice,
}
