from __future__ import annotations

from typing import Iterable

import numpy as np

from hardylab.core.exception import (
    DimensionMismatchException,
    NotAProjectorException,
    ProductRuleException,
)

MIN_DIMENSION = 3


class DiagonalOperator:
    """
    A Hermitian operator of the maximal commuting set, stored as its spectrum
    ``lambdas`` in the fixed eigenbasis. Indices are 1-based, as in ``P1``.
    """

    __slots__ = ("lambdas",)

    def __init__(self, lambdas: Iterable[float]):
        lambdas = np.asarray(list(lambdas), dtype=float)
        if lambdas.ndim != 1 or lambdas.shape[0] < MIN_DIMENSION:
            raise DimensionMismatchException(
                f"Operators of a maximal commuting set need dimension N >= {MIN_DIMENSION}, "
                f"got {lambdas.shape[0] if lambdas.ndim == 1 else lambdas.shape}"
            )
        if not np.all(np.isfinite(lambdas)):
            raise ProductRuleException(f"Spectrum {lambdas.tolist()} is not finite")
        lambdas.setflags(write=False)
        self.lambdas: np.ndarray = lambdas

    def __eq__(self, other):
        if not isinstance(other, DiagonalOperator):
            return False
        return bool(np.array_equal(self.lambdas, other.lambdas))

    def __hash__(self):
        return hash(tuple(self.lambdas.tolist()))

    def __len__(self):
        return self.lambdas.shape[0]

    def __mul__(self, other: DiagonalOperator) -> DiagonalOperator:
        self.check_dimension(other)
        return DiagonalOperator(self.lambdas * other.lambdas)

    def __repr__(self):
        return f"DiagonalOperator({[float(v) for v in self.lambdas]})"

    @property
    def is_projector(self) -> bool:
        return bool(np.all((self.lambdas == 0.0) | (self.lambdas == 1.0)))

    @property
    def n(self) -> int:
        return len(self)

    def check_dimension(self, other: DiagonalOperator | int):
        n = other if isinstance(other, int) else other.n
        if n != self.n:
            raise DimensionMismatchException(
                f"Operator of dimension {self.n} does not match dimension {n}"
            )

    def eigenvalue(self, index: int) -> float:
        if not 1 <= index <= self.n:
            raise DimensionMismatchException(
                f"Index {index} is out of range for dimension {self.n}"
            )
        return float(self.lambdas[index - 1])

    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero eigenvalues."""
        return frozenset(int(i) + 1 for i in np.flatnonzero(self.lambdas))

    def to_json(self) -> list[float]:
        return [float(v) for v in self.lambdas]


class DiagonalProjector(DiagonalOperator):
    """The projector onto the eigenvectors indexed by ``subset``."""

    __slots__ = ("subset",)

    def __init__(self, n: int, subset: Iterable[int]):
        subset = frozenset(int(i) for i in subset)
        if outside := sorted(i for i in subset if not 1 <= i <= n):
            raise DimensionMismatchException(
                f"Indices {outside} are out of range for dimension {n}"
            )
        super().__init__([1.0 if i in subset else 0.0 for i in range(1, n + 1)])
        self.subset: frozenset[int] = subset

    def __repr__(self):
        return f"DiagonalProjector({self.name})"

    @classmethod
    def from_operator(cls, operator: DiagonalOperator) -> DiagonalProjector:
        if not operator.is_projector:
            raise NotAProjectorException(
                f"Operator {operator.to_json()} has eigenvalues other than 0 and 1"
            )
        return cls(operator.n, operator.support())

    @property
    def name(self) -> str:
        if not self.subset:
            return "0"
        return "P" + "".join(str(i) for i in sorted(self.subset))

    @property
    def rank(self) -> int:
        return len(self.subset)
