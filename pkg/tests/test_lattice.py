import pytest

from hardylab.core.context import LabContext
from hardylab.core.exception import LatticeRangeException
from hardylab.prodrule import (
    ExplicitLattice,
    brute_force_lattice_assignments,
    enumerate_lattice_assignments,
    enumerate_lattice_assignments_async,
    uniqueness_theorem_check,
)

# Constant 0, constant 1 and one principal filter per nonempty proper subset
LATTICE_COUNTS = {3: 9, 4: 17, 5: 33}


@pytest.mark.parametrize("n,count", list(LATTICE_COUNTS.items()))
def test_lattice_counts(n: int, count: int):
    """Test the number of product-rule assignments on the projector lattice"""
    lattices = enumerate_lattice_assignments(n)
    assert len(lattices) == count
    assert all(lattice.is_multiplicative() for lattice in lattices)
    assert all(lattice.kind != "other" for lattice in lattices)


def test_lattice_kinds():
    """Test the order and the kinds of the enumerated assignments"""
    lattices = enumerate_lattice_assignments(3)
    assert lattices[0].kind == "const0"
    assert lattices[-1].kind == "const1"
    filters = [lattice for lattice in lattices if lattice.kind == "filter"]
    assert len(filters) == 7
    assert {lattice.generator for lattice in filters} == {
        frozenset(s)
        for s in ([1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3])
    }


@pytest.mark.parametrize("n", [3, 4])
def test_brute_force_agrees(n: int):
    """Test that the pruned search finds exactly the exhaustive solutions"""
    assert brute_force_lattice_assignments(n) == enumerate_lattice_assignments(n)


@pytest.mark.asyncio
async def test_enumerate_async(context: LabContext):
    """Test the concurrent enumeration on the default and on a process executor"""
    expected = enumerate_lattice_assignments(4)
    assert await enumerate_lattice_assignments_async(4) == expected
    assert (
        await enumerate_lattice_assignments_async(4, context.process_executor)
        == expected
    )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_uniqueness(n: int):
    """Test that a partly valued assignment singles out one rank-1 projector"""
    assert uniqueness_theorem_check(n)


def test_is_multiplicative():
    """Test the exhaustive product rule check of an explicit lattice"""
    assert ExplicitLattice.principal_filter(3, [2]).is_multiplicative()
    assert not ExplicitLattice(3, [[1], [2]]).is_multiplicative()
    assert ExplicitLattice(3, [[1], [2]]).kind == "other"


@pytest.mark.parametrize("n", [2, 6])
def test_lattice_range(n: int):
    """Test that only small lattices are enumerated"""
    with pytest.raises(LatticeRangeException):
        enumerate_lattice_assignments(n)


def test_brute_force_range():
    """Test that the exhaustive search stops at dimension 4"""
    with pytest.raises(LatticeRangeException):
        brute_force_lattice_assignments(5)
