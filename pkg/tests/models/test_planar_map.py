"""Tests for the planar map model."""

import pytest

from isobar.models.planar_map import (
    InvalidMapError,
    PlanarMap,
    canonical_code,
    dual,
    faces,
    from_faces,
)


def test_tetrahedron_counts(tetra):
    """Test V, E and F of the tetrahedron."""
    assert tetra.vertex_count == 4
    assert len(tetra.edges) == 6
    assert len(tetra.faces) == 4
    assert all(f.length == 3 for f in tetra.faces)


def test_cube_faces_are_quadrilaterals(cube_map):
    """Test that the cube has 6 faces of length 4."""
    assert cube_map.vertex_count == 8
    assert len(cube_map.edges) == 12
    assert [f.length for f in faces(cube_map)] == [4] * 6


def test_dodecahedron_faces_are_pentagons(dodeca):
    """Test that the dodecahedron has 12 pentagonal faces."""
    assert len(dodeca.faces) == 12
    assert all(f.length == 5 for f in dodeca.faces)


def test_every_dart_in_exactly_one_face(dodeca):
    """Test that face extraction consumes every dart once."""
    seen = [d for face in dodeca.faces for d in face.boundary]
    assert sorted(seen) == dodeca.darts()


def test_faces_ordered_by_minimal_dart(cube_map):
    """Test deterministic face numbering."""
    starts = [f.boundary[0] for f in cube_map.faces]
    assert starts == sorted(starts)
    for face in cube_map.faces:
        assert face.boundary[0] == min(face.boundary)


def test_face_boundary_follows_successor(cube_map):
    """Test that each boundary is a closed walk under the successor rule."""
    for face in cube_map.faces:
        for i, dart in enumerate(face.boundary):
            assert cube_map.successor(dart) == face.boundary[(i + 1) % face.length]


def test_euler_formula_holds(dodeca, cube_map, tetra):
    """Test V - E + F = 2 on the fixtures."""
    for m in (dodeca, cube_map, tetra):
        assert m.vertex_count - len(m.edges) + len(m.faces) == 2


def test_k5_rejected_as_nonplanar():
    """Test that K5 with any rotation fails the Euler check."""
    rotations = tuple(tuple(w for w in range(5) if w != v) for v in range(5))
    with pytest.raises(InvalidMapError, match="Euler"):
        PlanarMap(rotations=rotations)


def test_asymmetric_adjacency_rejected():
    """Test that a one-sided neighbour is reported."""
    with pytest.raises(InvalidMapError, match="Asymmetric"):
        PlanarMap(rotations=((1, 2), (0, 2), (0, 3), (1, 2)))


def test_degree_one_rejected():
    """Test that degree-1 vertices are rejected."""
    with pytest.raises(InvalidMapError, match="degree 1"):
        PlanarMap(rotations=((1,), (0,)))


def test_disconnected_rejected():
    """Test that two separate triangles are rejected."""
    with pytest.raises(InvalidMapError, match="disconnected"):
        PlanarMap(rotations=((1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)))


def test_self_loop_and_multiedge_rejected():
    """Test simple-graph validation."""
    with pytest.raises(InvalidMapError, match="self-loop"):
        PlanarMap(rotations=((0, 1), (0, 2), (1, 0)))
    with pytest.raises(InvalidMapError, match="multiedge"):
        PlanarMap(rotations=((1, 1), (0, 0)))


def test_outer_face_default_and_explicit(cube_map):
    """Test the designated outer face."""
    assert cube_map.outer_face == 0
    moved = cube_map.with_outer_face(3)
    assert moved.outer_face == 3
    assert moved.faces == cube_map.faces


def test_unknown_outer_dart_rejected(cube_map):
    """Test that the outer dart must exist."""
    with pytest.raises(InvalidMapError, match="not a dart"):
        PlanarMap(rotations=cube_map.rotations, outer_dart=(0, 6))


def test_edge_faces_are_two_sided(cube_map):
    """Test that every cube edge separates two different faces."""
    for edge, (f, g) in cube_map.edge_faces.items():
        assert f != g
        assert edge in cube_map.faces[f].edges
        assert edge in cube_map.faces[g].edges


def test_faces_at_vertex(dodeca):
    """Test that every dodecahedron vertex meets three distinct faces."""
    for v in range(dodeca.vertex_count):
        assert len(set(dodeca.faces_at(v))) == 3


class TestFromFaces:
    """Test rotation systems built from face lists."""

    def test_repeated_dart_rejected(self):
        """Test that a dart used twice is an error."""
        with pytest.raises(InvalidMapError, match="appears in two"):
            from_faces(3, [(0, 1, 2), (0, 1, 2)])

    def test_triangle(self):
        """Test the two-face triangle."""
        m = from_faces(3, [(0, 1, 2), (0, 2, 1)])
        assert len(m.faces) == 2
        assert m.rotations == ((1, 2), (0, 2), (0, 1))

    def test_outer_dart_kept(self):
        """Test that an explicit outer dart is stored as given."""
        m = from_faces(3, [(0, 1, 2), (0, 2, 1)], outer_dart=(2, 1))
        assert m.outer_dart == (2, 1)
        assert m.outer_face == m.face_of((2, 1))


class TestDual:
    """Test dual maps."""

    def test_tetrahedron_self_dual(self, tetra):
        """Test that the tetrahedron is self-dual."""
        d = dual(tetra)
        assert d.vertex_count == 4
        assert canonical_code(d) == canonical_code(tetra)

    def test_cube_dual_is_octahedron(self, cube_map):
        """Test that dual(cube) has 6 vertices of degree 4."""
        d = dual(cube_map)
        assert d.vertex_count == 6
        assert len(d.edges) == 12
        assert all(d.degree(v) == 4 for v in range(6))

    def test_dual_face_count_matches_vertex_count(self, dodeca):
        """Test that the dual has one face per primal vertex."""
        assert len(dual(dodeca).faces) == dodeca.vertex_count

    @pytest.mark.parametrize("name", ["tetra", "cube_map", "dodeca"])
    def test_double_dual_isomorphic(self, name, request):
        """Test dual(dual(m)) is isomorphic to m as an oriented map."""
        m = request.getfixturevalue(name)
        assert canonical_code(dual(dual(m))) == canonical_code(m)

    def test_triangulation_dual_is_cubic(self, g12_triangulation):
        """Test that the dual of a 28-vertex triangulation is a 52-vertex cubic map."""
        d = dual(g12_triangulation)
        assert d.vertex_count == 2 * 28 - 4
        assert all(d.degree(v) == 3 for v in range(d.vertex_count))

    def test_dual_with_multiedge_rejected(self, c4):
        """Test that a cycle, whose two faces share every edge, has no simple dual."""
        with pytest.raises(InvalidMapError, match="multiedge"):
            dual(c4)


def test_canonical_code_distinguishes(cube_map, tetra):
    """Test that non-isomorphic maps get different codes."""
    assert canonical_code(cube_map) != canonical_code(tetra)


def test_canonical_code_ignores_labels(dodeca):
    """Test that relabelling vertices keeps the code."""
    n = dodeca.vertex_count
    perm = [(7 * v + 3) % n for v in range(n)]
    relabelled = [()] * n
    for v, rot in enumerate(dodeca.rotations):
        relabelled[perm[v]] = tuple(perm[w] for w in rot)
    assert canonical_code(PlanarMap(rotations=tuple(relabelled))) == canonical_code(dodeca)
