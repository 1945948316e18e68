"""Tests for HamiltonianCycle and structure result types."""

from isobar.models.cycle import HamiltonianCycle, canonical_rotation
from isobar.models.structure import EdgeCut


def test_canonical_rotation_starts_at_minimum():
    """Test rotation to the smallest vertex."""
    assert canonical_rotation([3, 1, 2, 0]) == (0, 2, 1, 3)


def test_canonical_rotation_fixes_orientation():
    """Test that both directions give the same sequence."""
    forward = canonical_rotation([0, 1, 2, 3, 4])
    backward = canonical_rotation([0, 4, 3, 2, 1])
    assert forward == backward == (0, 1, 2, 3, 4)


def test_cycle_from_sequence():
    """Test creating a cycle from an arbitrary rotation."""
    cycle = HamiltonianCycle.from_sequence([2, 3, 0, 1])

    assert cycle.vertices == (0, 1, 2, 3)
    assert cycle.h == 4
    assert cycle.edges == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})


def test_cycle_format_line():
    """Test CLI formatting."""
    cycle = HamiltonianCycle.from_sequence([0, 4, 5, 1, 2, 3])
    assert cycle.format_line() == "0 3 2 1 5 4"
    assert str(cycle) == cycle.format_line()


def test_equal_cycles_compare_equal():
    """Test that rotations and reflections give equal values."""
    a = HamiltonianCycle.from_sequence([1, 2, 3, 0])
    b = HamiltonianCycle.from_sequence([3, 2, 1, 0])
    assert a == b
    assert len({a, b}) == 1


def test_edge_cut_format_line():
    """Test edge cut formatting."""
    cut = EdgeCut(edges=((0, 1), (2, 5)), sides=(frozenset({0, 2}), frozenset({1, 5})))
    assert cut.format_line() == "0-1 2-5"
