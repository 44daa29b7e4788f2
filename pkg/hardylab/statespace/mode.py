from __future__ import annotations

import re
from typing import Iterable, MutableSequence

from hardylab.core.exception import StateSpaceException

ELECTRON = "-"
POSITRON = "+"
GAMMA = "gamma"
PATH_NAMES = ("s", "u", "v", "c", "d")

_GAMMA_ALIASES = {"gamma", "γ", "g"}
_MODE_PATTERN = re.compile(r"([a-z])([+-])")


class ModeLabel:
    """
    A basis label of the joint electron-positron space.

    A label is either a product of single-particle modes, written positron first
    (e.g. ``u+v-``), a single-particle mode (e.g. ``s+``) or the annihilation
    photon ``gamma``, which spans a one-dimensional sector orthogonal to all
    product modes.
    """

    __slots__ = ("modes",)

    def __init__(self, *modes: str):
        if not modes:
            raise StateSpaceException("A mode label needs at least one mode")
        if len(modes) == 1 and modes[0] in _GAMMA_ALIASES:
            self.modes: tuple[str, ...] = (GAMMA,)
            return
        seen = set()
        for mode in modes:
            if (
                len(mode) != 2
                or mode[0] not in PATH_NAMES
                or mode[1] not in (POSITRON, ELECTRON)
            ):
                raise StateSpaceException(f"Unknown mode {mode!r}")
            if mode[1] in seen:
                raise StateSpaceException(
                    f"Label {''.join(modes)!r} assigns two modes to the same particle"
                )
            seen.add(mode[1])
        self.modes = tuple(sorted(modes, key=lambda m: m[1] != POSITRON))

    def __eq__(self, other):
        if not isinstance(other, ModeLabel):
            return False
        return self.modes == other.modes

    def __hash__(self):
        return hash(self.modes)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"ModeLabel({self.name!r})"

    def __str__(self):
        return self.name

    @property
    def is_gamma(self) -> bool:
        return self.modes == (GAMMA,)

    @property
    def name(self) -> str:
        return "".join(self.modes)

    @classmethod
    def parse(cls, text: str | ModeLabel) -> ModeLabel:
        if isinstance(text, ModeLabel):
            return text
        text = text.strip()
        if text.lower() in _GAMMA_ALIASES:
            return cls(GAMMA)
        modes = _MODE_PATTERN.findall(text)
        if not modes or "".join(p + s for p, s in modes) != text:
            raise StateSpaceException(f"Cannot parse mode label {text!r}")
        return cls(*(p + s for p, s in modes))

    def contains(self, mode: str) -> bool:
        if mode in _GAMMA_ALIASES:
            return self.is_gamma
        return mode in self.modes

    def particle_mode(self, particle: str) -> str | None:
        for mode in self.modes:
            if mode != GAMMA and mode[1] == particle:
                return mode
        return None

    def replace(self, particle: str, mode: str) -> ModeLabel:
        return ModeLabel(
            *(mode if m[1] == particle else m for m in self.modes if m != GAMMA)
        )

    def sort_key(self) -> tuple[bool, str]:
        return self.is_gamma, self.name


def canonical_basis(labels: Iterable[ModeLabel | str]) -> tuple[ModeLabel, ...]:
    basis: MutableSequence[ModeLabel] = [ModeLabel.parse(label) for label in labels]
    if len(set(basis)) != len(basis):
        duplicates = sorted({str(b) for b in basis if basis.count(b) > 1})
        raise StateSpaceException(
            f"Basis labels must be pairwise distinct, found duplicates {duplicates}"
        )
    return tuple(sorted(basis, key=ModeLabel.sort_key))
