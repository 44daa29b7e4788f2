from __future__ import annotations

import asyncio
import logging
from concurrent.futures import Executor
from itertools import product
from typing import MutableSequence

import numpy as np

from hardylab.core.exception import LatticeRangeException
from hardylab.log_handler import logger
from hardylab.prodrule.function import ExplicitLattice

MIN_LATTICE_DIMENSION = 3
MAX_LATTICE_DIMENSION = 5
MAX_BRUTE_FORCE_DIMENSION = 4

UNKNOWN = -1

# Assignments are tuples indexed by subset bitmask,
# bit k set means k + 1 is in the subset


def _check_range(n: int, upper: int):
    if not MIN_LATTICE_DIMENSION <= n <= upper:
        raise LatticeRangeException(
            f"Lattice dimension must be between {MIN_LATTICE_DIMENSION} and {upper}, got {n}"
        )


def _assign(values: list[int], mask: int, value: int) -> bool | None:
    """Set ``values[mask]``. Return whether it changed, or None on a conflict."""
    if values[mask] == UNKNOWN:
        values[mask] = value
        return True
    return None if values[mask] != value else False


def _propagate(values: list[int]) -> bool:
    size = len(values)
    changed = True
    while changed:
        changed = False
        for a in range(size):
            for b in range(a, size):
                va, vb, ab = values[a], values[b], a & b
                forced: MutableSequence[tuple[int, int]] = []
                if va == 1 and vb == 1:
                    forced.append((ab, 1))
                elif va == 0 or vb == 0:
                    forced.append((ab, 0))
                if values[ab] == 1:
                    forced.extend([(a, 1), (b, 1)])
                elif values[ab] == 0:
                    if va == 1:
                        forced.append((b, 0))
                    if vb == 1:
                        forced.append((a, 0))
                for mask, value in forced:
                    if (result := _assign(values, mask, value)) is None:
                        return False
                    changed |= result
    return True


def _is_multiplicative(values: tuple[int, ...]) -> bool:
    size = len(values)
    return all(
        values[a & b] == values[a] * values[b] for a in range(size) for b in range(size)
    )


def _search(values: list[int], order: MutableSequence[int]) -> list[tuple[int, ...]]:
    if not _propagate(values):
        return []
    unknown = next((mask for mask in order if values[mask] == UNKNOWN), None)
    if unknown is None:
        assignment = tuple(values)
        return [assignment] if _is_multiplicative(assignment) else []
    found = []
    for value in (0, 1):
        branch = list(values)
        branch[unknown] = value
        found.extend(_search(branch, order))
    return found


def explore_branch(n: int, singletons: tuple[int, ...]) -> list[tuple[int, ...]]:
    """
    All multiplicative assignments taking the values ``singletons``
    on the rank-1 projectors.
    """
    size = 1 << n
    values = [UNKNOWN] * size
    for k, value in enumerate(singletons):
        values[1 << k] = value
    order = sorted(range(size), key=lambda m: (bin(m).count("1"), m))
    return _search(values, order)


def _singleton_branches(n: int) -> list[tuple[int, ...]]:
    return list(product((0, 1), repeat=n))


def _to_lattices(
    n: int, assignments: MutableSequence[tuple[int, ...]]
) -> list[ExplicitLattice]:
    assignments = sorted(
        set(assignments),
        key=lambda v: (sum(v), [m for m, x in enumerate(v) if x]),
    )
    return [
        ExplicitLattice(
            n,
            [
                [k + 1 for k in range(n) if mask >> k & 1]
                for mask, value in enumerate(assignment)
                if value
            ],
        )
        for assignment in assignments
    ]


def enumerate_lattice_assignments(n: int) -> list[ExplicitLattice]:
    _check_range(n, MAX_LATTICE_DIMENSION)
    if logger.isEnabledFor(logging.INFO):
        logger.info(f"ENUMERATING product-rule assignments for N = {n}")
    found = []
    for singletons in _singleton_branches(n):
        found.extend(explore_branch(n, singletons))
    return _to_lattices(n, found)


async def enumerate_lattice_assignments_async(
    n: int, executor: Executor | None = None
) -> list[ExplicitLattice]:
    """Explore the singleton branches on ``executor``. The result order is canonical."""
    _check_range(n, MAX_LATTICE_DIMENSION)
    if logger.isEnabledFor(logging.INFO):
        logger.info(f"ENUMERATING product-rule assignments for N = {n} concurrently")
    loop = asyncio.get_running_loop()
    branches = await asyncio.gather(
        *(
            loop.run_in_executor(executor, explore_branch, n, singletons)
            for singletons in _singleton_branches(n)
        )
    )
    return _to_lattices(n, [a for branch in branches for a in branch])


def brute_force_lattice_assignments(n: int) -> list[ExplicitLattice]:
    """Check every 0/1 assignment against every pair of subsets."""
    _check_range(n, MAX_BRUTE_FORCE_DIMENSION)
    size = 1 << n
    candidates = np.arange(1 << size, dtype=np.int64)
    bits = (candidates[:, None] >> np.arange(size)) & 1
    valid = np.ones(candidates.shape[0], dtype=bool)
    for a in range(size):
        for b in range(a, size):
            valid &= bits[:, a & b] == bits[:, a] * bits[:, b]
    return _to_lattices(n, [tuple(int(x) for x in row) for row in bits[valid]])


def uniqueness_theorem_check(n: int) -> bool:
    """
    Every assignment valued 1 on some but not all rank-1 projectors singles out
    exactly one of them and is the principal filter it generates.
    """
    for lattice in enumerate_lattice_assignments(n):
        singletons = [k for k in range(1, n + 1) if frozenset([k]) in lattice.ones]
        if 0 < len(singletons) < n:
            if len(singletons) != 1 or lattice.ones != (
                ExplicitLattice.principal_filter(n, singletons).ones
            ):
                if logger.isEnabledFor(logging.WARNING):
                    logger.warning(
                        f"FAILED uniqueness for N = {n}: {lattice.to_json()['ones']}"
                    )
                return False
    if logger.isEnabledFor(logging.INFO):
        logger.info(f"VERIFIED uniqueness of the singled-out projector for N = {n}")
    return True
