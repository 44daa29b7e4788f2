from __future__ import annotations

import re
from typing import Any, Callable, Iterable, MutableMapping

import numpy as np

from hardylab.core.context import STATE_TOLERANCE
from hardylab.core.exception import (
    BasisMismatchException,
    InvalidProjectorException,
    StateSpaceException,
    ZeroVectorException,
)
from hardylab.statespace.mode import ModeLabel, canonical_basis

_OBSERVABLE_PATTERN = re.compile(r"([A-Za-z])([+-])")


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _permutation(
    labels: Iterable[ModeLabel | str], basis: tuple[ModeLabel, ...]
) -> list[int]:
    position = {label: i for i, label in enumerate(ModeLabel.parse(x) for x in labels)}
    return [position[label] for label in basis]


class StateVector:
    __slots__ = ("basis", "amplitudes")

    def __init__(
        self,
        basis: Iterable[ModeLabel | str],
        amplitudes: Iterable[complex],
    ):
        labels = list(basis)
        amplitudes = np.asarray(list(amplitudes), dtype=complex)
        if amplitudes.shape != (len(labels),):
            raise StateSpaceException(
                f"A state over {len(labels)} basis labels needs as many amplitudes, "
                f"got {amplitudes.shape[0] if amplitudes.ndim else 0}"
            )
        if not np.all(np.isfinite(amplitudes)):
            raise StateSpaceException("State amplitudes must be finite")
        self.basis: tuple[ModeLabel, ...] = canonical_basis(labels)
        self.amplitudes: np.ndarray = _frozen(
            amplitudes[_permutation(labels, self.basis)]
        )

    def __repr__(self):
        terms = ", ".join(
            f"{label}: {amplitude:.6g}"
            for label, amplitude in zip(self.basis, self.amplitudes)
        )
        return f"StateVector({terms})"

    @classmethod
    def basis_state(
        cls, basis: Iterable[ModeLabel | str], label: ModeLabel | str
    ) -> StateVector:
        basis = canonical_basis(basis)
        label = ModeLabel.parse(label)
        if label not in basis:
            raise BasisMismatchException(f"Label {label} is not part of the basis")
        return cls(basis, [1.0 if b == label else 0.0 for b in basis])

    @classmethod
    def from_json(cls, value: MutableMapping[str, Any]) -> StateVector:
        if len(value["re"]) != len(value["im"]):
            raise StateSpaceException(
                "Real and imaginary parts must have the same length"
            )
        return cls(
            value["basis"],
            [complex(re, im) for re, im in zip(value["re"], value["im"])],
        )

    @classmethod
    def from_mapping(
        cls,
        amplitudes: MutableMapping[ModeLabel | str, complex],
        basis: Iterable[ModeLabel | str] | None = None,
    ) -> StateVector:
        amplitudes = {ModeLabel.parse(k): v for k, v in amplitudes.items()}
        basis = canonical_basis(basis if basis is not None else amplitudes.keys())
        if missing := set(amplitudes.keys()) - set(basis):
            raise BasisMismatchException(
                f"Labels {sorted(str(m) for m in missing)} are not part of the basis"
            )
        return cls(basis, [amplitudes.get(label, 0.0) for label in basis])

    def amplitude(self, label: ModeLabel | str) -> complex:
        label = ModeLabel.parse(label)
        try:
            return complex(self.amplitudes[self.basis.index(label)])
        except ValueError:
            raise BasisMismatchException(
                f"Label {label} is not part of the basis"
            ) from None

    def as_mapping(self) -> MutableMapping[str, complex]:
        return {str(b): complex(a) for b, a in zip(self.basis, self.amplitudes)}

    def isclose(self, other: StateVector, tolerance: float = STATE_TOLERANCE) -> bool:
        return self.basis == other.basis and bool(
            np.all(np.abs(self.amplitudes - other.amplitudes) <= tolerance)
        )

    def is_normalized(self, tolerance: float = STATE_TOLERANCE) -> bool:
        return abs(self.norm2() - 1.0) <= tolerance

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def norm2(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def normalized(self) -> StateVector:
        if (norm := self.norm()) == 0.0:
            raise ZeroVectorException("Cannot normalize the zero vector")
        return StateVector(self.basis, self.amplitudes / norm)

    def scaled(self, factor: complex) -> StateVector:
        return StateVector(self.basis, self.amplitudes * factor)

    def to_json(self) -> MutableMapping[str, Any]:
        return {
            "basis": [str(b) for b in self.basis],
            "re": [float(a.real) for a in self.amplitudes],
            "im": [float(a.imag) for a in self.amplitudes],
        }


class LinearMap:
    __slots__ = ("name", "domain", "codomain", "matrix", "isometric")

    def __init__(
        self,
        domain: Iterable[ModeLabel | str],
        codomain: Iterable[ModeLabel | str],
        matrix: Any,
        name: str = "",
    ):
        domain, codomain = list(domain), list(codomain)
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (len(codomain), len(domain)):
            raise StateSpaceException(
                f"Map {name!r} needs a {len(codomain)}x{len(domain)} matrix, "
                f"got {matrix.shape}"
            )
        self.name: str = name
        self.domain: tuple[ModeLabel, ...] = canonical_basis(domain)
        self.codomain: tuple[ModeLabel, ...] = canonical_basis(codomain)
        rows = _permutation(codomain, self.codomain)
        columns = _permutation(domain, self.domain)
        self.matrix: np.ndarray = _frozen(matrix[np.ix_(rows, columns)])
        gram = self.matrix.conj().T @ self.matrix
        self.isometric: bool = bool(
            np.all(np.abs(gram - np.eye(len(self.domain))) <= STATE_TOLERANCE)
        )

    def __repr__(self):
        return (
            f"LinearMap({self.name!r}, {len(self.domain)} -> {len(self.codomain)})"
        )

    @classmethod
    def from_action(
        cls,
        domain: Iterable[ModeLabel | str],
        action: Callable[[ModeLabel], MutableMapping[ModeLabel, complex]],
        name: str = "",
        codomain: Iterable[ModeLabel | str] | None = None,
    ) -> LinearMap:
        domain = canonical_basis(domain)
        images = [action(label) for label in domain]
        labels = set(canonical_basis(codomain)) if codomain is not None else set()
        for image in images:
            labels.update(image.keys())
        codomain = canonical_basis(labels)
        matrix = np.zeros((len(codomain), len(domain)), dtype=complex)
        for j, image in enumerate(images):
            for label, amplitude in image.items():
                matrix[codomain.index(label), j] += amplitude
        return cls(domain, codomain, matrix, name)

    @classmethod
    def identity(cls, basis: Iterable[ModeLabel | str], name: str = "1") -> LinearMap:
        basis = canonical_basis(basis)
        return cls(basis, basis, np.eye(len(basis)), name)

    def adjoint(self) -> LinearMap:
        return LinearMap(
            self.codomain, self.domain, self.matrix.conj().T, f"{self.name}†"
        )

    def renamed(self, name: str) -> LinearMap:
        return LinearMap(self.domain, self.codomain, self.matrix, name)

    def compose(self, inner: LinearMap) -> LinearMap:
        """Return ``self ∘ inner``, i.e. ``inner`` is applied first."""
        if inner.codomain != self.domain:
            raise BasisMismatchException(
                f"Cannot compose {self.name!r} after {inner.name!r}: "
                "the inner codomain differs from the outer domain"
            )
        return LinearMap(
            inner.domain,
            self.codomain,
            self.matrix @ inner.matrix,
            f"{self.name}∘{inner.name}",
        )


class Projector:
    __slots__ = ("name", "basis", "labels", "_matrix")

    def __init__(
        self,
        basis: Iterable[ModeLabel | str],
        labels: Iterable[ModeLabel | str] | None = None,
        matrix: Any | None = None,
        name: str | None = None,
    ):
        self.basis: tuple[ModeLabel, ...] = canonical_basis(basis)
        if (labels is None) == (matrix is None):
            raise InvalidProjectorException(
                "A projector is defined either by a label subset or by a matrix"
            )
        if labels is not None:
            self.labels: frozenset[ModeLabel] | None = frozenset(
                ModeLabel.parse(label) for label in labels
            )
            if outside := self.labels - set(self.basis):
                raise InvalidProjectorException(
                    f"Labels {sorted(str(o) for o in outside)} are not part of the basis"
                )
            self._matrix: np.ndarray = _frozen(
                np.diag([1.0 if b in self.labels else 0.0 for b in self.basis]).astype(
                    complex
                )
            )
        else:
            self.labels = None
            matrix = np.asarray(matrix, dtype=complex)
            if matrix.shape != (len(self.basis), len(self.basis)):
                raise InvalidProjectorException(
                    f"Projector matrix must be {len(self.basis)}x{len(self.basis)}"
                )
            if not np.all(np.abs(matrix - matrix.conj().T) <= STATE_TOLERANCE):
                raise InvalidProjectorException("Projector matrix is not Hermitian")
            if not np.all(np.abs(matrix @ matrix - matrix) <= STATE_TOLERANCE):
                raise InvalidProjectorException("Projector matrix is not idempotent")
            self._matrix = _frozen(matrix)
        self.name: str = name or (
            "P{" + ",".join(str(b) for b in self.basis if b in self.labels) + "}"
            if self.labels is not None
            else "P"
        )

    def __eq__(self, other):
        if not isinstance(other, Projector):
            return False
        return self.basis == other.basis and bool(
            np.all(np.abs(self._matrix - other._matrix) <= STATE_TOLERANCE)
        )

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Projector({self.name!r}, rank={self.rank})"

    @property
    def is_diagonal(self) -> bool:
        return self.labels is not None

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def rank(self) -> int:
        return int(round(np.trace(self._matrix).real))

    def commutes_with(self, other: Projector) -> bool:
        self._check_basis(other)
        return bool(
            np.all(
                np.abs(self._matrix @ other._matrix - other._matrix @ self._matrix)
                <= STATE_TOLERANCE
            )
        )

    def complement(self) -> Projector:
        if self.is_diagonal:
            return Projector(
                self.basis,
                labels=[b for b in self.basis if b not in self.labels],
                name=f"1-{self.name}",
            )
        return Projector(
            self.basis,
            matrix=np.eye(len(self.basis)) - self._matrix,
            name=f"1-{self.name}",
        )

    def product(self, other: Projector, name: str | None = None) -> Projector:
        self._check_basis(other)
        name = name or f"{self.name}{other.name}"
        if self.is_diagonal and other.is_diagonal:
            return Projector(self.basis, labels=self.labels & other.labels, name=name)
        if not self.commutes_with(other):
            raise InvalidProjectorException(
                f"Projectors {self.name} and {other.name} do not commute"
            )
        return Projector(self.basis, matrix=self._matrix @ other._matrix, name=name)

    def _check_basis(self, other: Projector):
        if self.basis != other.basis:
            raise BasisMismatchException(
                f"Projectors {self.name} and {other.name} act on different bases"
            )


def apply(m: LinearMap, v: StateVector) -> StateVector:
    if v.basis != m.domain:
        raise BasisMismatchException(
            f"State basis {[str(b) for b in v.basis]} differs from the domain of map {m.name!r}"
        )
    return StateVector(m.codomain, m.matrix @ v.amplitudes)


def inner_product(a: StateVector, b: StateVector) -> complex:
    if a.basis != b.basis:
        raise BasisMismatchException(
            f"Cannot take the inner product of states over different bases: "
            f"{[str(x) for x in a.basis]} and {[str(x) for x in b.basis]}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def mode_projector(
    basis: Iterable[ModeLabel | str], *modes: str, name: str | None = None
) -> Projector:
    """Project onto every basis label that carries all the given modes."""
    basis = canonical_basis(basis)
    labels = [b for b in basis if all(b.contains(m) for m in modes)]
    if not labels:
        raise InvalidProjectorException(
            f"No basis label carries the modes {list(modes)}"
        )
    return Projector(basis, labels=labels, name=name or "P{" + "".join(modes) + "}")


def observable_projector(basis: Iterable[ModeLabel | str], name: str) -> Projector:
    """
    Build the projector named by an observable such as
    ``U+``, ``D-``, ``U+U-`` or ``gamma``.
    Upper-case letters name the path, the sign names the particle.
    """
    text = name.strip()
    if text.lower() in ("gamma", "γ"):
        return mode_projector(basis, "gamma", name=text)
    modes = _OBSERVABLE_PATTERN.findall(text)
    if not modes or "".join(p + s for p, s in modes) != text:
        raise InvalidProjectorException(f"Cannot parse observable {name!r}")
    return mode_projector(basis, *(p.lower() + s for p, s in modes), name=text)


def project(p: Projector, v: StateVector) -> tuple[StateVector, float]:
    if v.basis != p.basis:
        raise BasisMismatchException(
            f"Projector {p.name} and the state act on different bases"
        )
    if (norm2 := v.norm2()) == 0.0:
        raise ZeroVectorException(f"Cannot project the zero vector with {p.name}")
    projected = StateVector(v.basis, p.matrix @ v.amplitudes)
    return projected, min(max(projected.norm2() / norm2, 0.0), 1.0)
