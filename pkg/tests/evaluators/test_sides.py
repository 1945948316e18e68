"""Tests for cycle sides, chords and dual cuts."""

import pytest

from isobar.evaluators.sides import (
    NotACycleError,
    classify_chords,
    cycle_edges,
    cycle_side_faces,
    dual_cut_of_cycle,
    require_hamiltonian,
)
from isobar.models.cycle import HamiltonianCycle

CUBE_CYCLE = [0, 1, 2, 3, 7, 6, 5, 4]


def test_cycle_edges(cube_map):
    """Test edges of a cube Hamiltonian cycle."""
    edges = cycle_edges(cube_map, CUBE_CYCLE)
    assert len(edges) == 8
    assert (0, 4) in edges
    assert (0, 3) not in edges


def test_cycle_edges_accepts_value_type(cube_map):
    """Test that HamiltonianCycle values work like sequences."""
    cycle = HamiltonianCycle.from_sequence(CUBE_CYCLE)
    assert cycle_edges(cube_map, cycle) == cycle.edges


@pytest.mark.parametrize(
    "sequence,match",
    [
        ([0, 1], "at least 3"),
        ([0, 1, 2, 1], "repeats"),
        ([0, 1, 2], "not adjacent"),
        ([0, 1, 99], "unknown vertex"),
    ],
)
def test_not_a_cycle(cube_map, sequence, match):
    """Test rejection of sequences that are not cycles of the map."""
    with pytest.raises(NotACycleError, match=match):
        cycle_edges(cube_map, sequence)


def test_require_hamiltonian_rejects_short_cycle(cube_map):
    """Test that a face cycle is not Hamiltonian."""
    with pytest.raises(NotACycleError, match="length 4"):
        require_hamiltonian(cube_map, [0, 1, 2, 3])


def test_side_faces_split_cube_evenly(cube_map):
    """Test that a Hamiltonian cycle leaves three faces on each side."""
    inner, outer = cycle_side_faces(cube_map, CUBE_CYCLE)

    assert len(inner) == len(outer) == 3
    assert inner | outer == frozenset(range(6))
    assert cube_map.outer_face in outer


def test_side_faces_follow_outer_face(cube_map):
    """Test that moving the outer face swaps the sides."""
    inner, outer = cycle_side_faces(cube_map, CUBE_CYCLE)
    moved = cube_map.with_outer_face(min(inner))
    inner2, outer2 = cycle_side_faces(moved, CUBE_CYCLE)

    assert inner2 == outer
    assert outer2 == inner


def test_side_faces_of_short_cycle(cube_map):
    """Test that a face boundary has one face on its inner side."""
    face = cube_map.faces[3]
    inner, outer = cycle_side_faces(cube_map, face.vertices)
    assert inner == frozenset({3}) or outer == frozenset({3})


def test_bare_cycle_has_one_face_per_side(c4):
    """Test a map that is a single cycle."""
    inner, outer = cycle_side_faces(c4, [0, 1, 2, 3])
    assert len(inner) == len(outer) == 1
    assert classify_chords(c4, [0, 1, 2, 3]) == (frozenset(), frozenset())


def test_classify_chords_cube(cube_map):
    """Test that the four cube chords split two and two."""
    inner, outer = classify_chords(cube_map, CUBE_CYCLE)

    assert len(inner) == len(outer) == 2
    assert inner | outer == {(0, 3), (1, 5), (2, 6), (4, 7)}


def test_classify_chords_rejects_non_cycle(dodeca):
    """Test that a walk with a missing edge is rejected."""
    cycle = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]
    with pytest.raises(NotACycleError):
        classify_chords(dodeca, cycle)


class TestDualCut:
    """Test the dual cut of a Hamiltonian cycle."""

    def test_cut_size_is_cycle_length(self, cube_map):
        """Test one crossing dual edge per cycle edge."""
        cut = dual_cut_of_cycle(cube_map, CUBE_CYCLE)
        assert len(cut.cut_edges) == 8

    def test_both_sides_are_trees(self, cube_map):
        """Test that both dual pieces are trees."""
        cut = dual_cut_of_cycle(cube_map, CUBE_CYCLE)
        assert cut.side_is_tree(0)
        assert cut.side_is_tree(1)

    def test_tree_edge_counts(self, cube_map):
        """Test that each tree has one edge fewer than it has faces."""
        cut = dual_cut_of_cycle(cube_map, CUBE_CYCLE)
        for nodes, edges in cut.side_components:
            assert len(edges) == len(nodes) - 1
