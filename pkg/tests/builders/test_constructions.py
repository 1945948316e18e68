"""Tests for the generated family of non-Hamiltonian maps."""

from collections import Counter

import pytest

from isobar.builders.constructions import (
    PAIR_SPLITS,
    ConstructionError,
    annulus_layer,
    bichromatic_components,
    build_layers,
    colouring_from_hamiltonian_cycle,
    f_vector,
    face_colouring_of_dual,
    grinberg_map,
    grinberg_triangulation,
    is_four_chromatic,
    params_of,
    tree_split,
    vertex_colouring,
    zigzag_disk,
)
from isobar.evaluators.grinberg import certify_non_hamiltonian, face_weights
from isobar.evaluators.hamilton import enumerate_hamiltonian_cycles
from isobar.limits import CeilingExceededError
from isobar.models.planar_map import dual


class TestZigzag:
    """Test the hub disk."""

    def test_counts(self):
        """Test vertices and triangles of a length-6 disk."""
        disk = zigzag_disk(6)

        assert disk.vertex_count == 13
        assert len(disk.triangles) == 18
        assert disk.boundary == (7, 8, 9, 10, 11, 12)

    def test_degrees(self):
        """Test that C_0 vertices have degree 5 and C_1 vertices two inside edges."""
        disk = zigzag_disk(6)

        assert disk.degree(0) == 6
        assert all(disk.degree(v) == 5 for v in range(1, 7))
        assert all(disk.inside_edges(v) == 2 for v in disk.boundary)

    def test_too_short(self):
        """Test that a disk needs at least three boundary vertices."""
        with pytest.raises(ConstructionError, match="length >= 3"):
            zigzag_disk(2)


class TestAnnulus:
    """Test one annulus layer."""

    def test_grows_boundary_by_a_third(self):
        """Test that 3m boundary vertices become 4m."""
        disk = annulus_layer(zigzag_disk(6))

        assert len(disk.boundary) == 8
        assert disk.vertex_count == 13 + 7 * 2
        assert len(disk.triangles) == 18 + 13 * 2
        assert len(disk.rings) == 2

    def test_inner_degree_pattern(self):
        """Test that inner triples end with degrees 8, 5, 8."""
        disk = annulus_layer(zigzag_disk(6))
        inner = disk.rings[0]
        assert [disk.degree(v) for v in inner] == [8, 5, 8, 8, 5, 8]

    def test_gadget_interior_degree_five(self):
        """Test that every gadget-interior vertex has degree 5."""
        disk = annulus_layer(zigzag_disk(6))
        assert all(disk.degree(v) == 5 for v in range(13, 19))

    def test_outer_inside_edges(self):
        """Test that each new boundary vertex has two inside edges."""
        disk = annulus_layer(zigzag_disk(6))
        assert all(disk.inside_edges(v) == 2 for v in disk.boundary)

    def test_length_not_divisible_by_three(self):
        """Test that the boundary must split into triples."""
        with pytest.raises(ConstructionError, match="divisible by 3"):
            annulus_layer(zigzag_disk(4))


class TestBuildLayers:
    """Test the finished triangulation G'."""

    def test_alpha1_beta2_census(self, g12_triangulation):
        """Test V, E and the degree multiset of G'(1, 2)."""
        degrees = Counter(
            g12_triangulation.degree(v) for v in range(g12_triangulation.vertex_count)
        )

        assert g12_triangulation.vertex_count == 28
        assert len(g12_triangulation.edges) == 78
        assert degrees == {5: 22, 6: 1, 8: 5}

    def test_all_faces_triangles(self, g12_triangulation):
        """Test that G' is a triangulation."""
        assert all(f.length == 3 for f in g12_triangulation.faces)

    def test_layer_states(self, g12_layers):
        """Test C_1 and C_2 lengths and inside edges."""
        _, layers = g12_layers

        assert [len(layer.cycle) for layer in layers] == [6, 8]
        assert all(layer.length_ok for layer in layers)
        assert all(layer.inside_edges_ok for layer in layers)

    @pytest.mark.parametrize(
        "alpha,beta,vertices,lengths",
        [(1, 5, 67, [15, 20]), (2, 2, 136, [18, 24, 32])],
    )
    def test_larger_parameters(self, alpha, beta, vertices, lengths):
        """Test vertex counts and layer lengths beyond the smallest member."""
        triangulation, layers = build_layers(params_of(alpha, beta))

        assert triangulation.vertex_count == vertices
        assert [len(layer.cycle) for layer in layers] == lengths
        assert all(layer.length_ok and layer.inside_edges_ok for layer in layers)

    def test_degrees_are_five_or_eight(self):
        """Test that all vertices except hub and apex have degree 5 or 8."""
        tri = grinberg_triangulation(params_of(2, 2))
        apex = tri.vertex_count - 1
        others = {tri.degree(v) for v in range(1, apex)}

        assert others == {5, 8}
        assert tri.degree(0) == 18
        assert tri.degree(apex) == 32


class TestGrinbergMap:
    """Test the cubic dual G."""

    def test_alpha1_beta2(self, g12):
        """Test the 52-vertex cubic map and its weights."""
        weights = Counter(face_weights(g12))

        assert g12.vertex_count == 52
        assert len(g12.faces) == 28
        assert all(g12.degree(v) == 3 for v in range(52))
        assert weights == {3: 22, 4: 1, 6: 5}
        assert sum(face_weights(g12)) == 2 * (52 - 2)

    @pytest.mark.parametrize("alpha,beta", [(1, 2), (1, 5), (2, 2)])
    def test_case_a_certificate(self, alpha, beta):
        """Test that the hub face is the only weight off residue 0."""
        params = params_of(alpha, beta)
        cert = certify_non_hamiltonian(grinberg_map(params))

        assert cert is not None
        assert cert.kind == "case_a"
        assert cert.weight == params.hub_degree - 2

    def test_face_count_grows(self):
        """Test that larger parameters give more faces."""
        counts = [len(grinberg_map(params_of(a, b)).faces) for a, b in [(1, 2), (1, 5), (2, 2)]]
        assert counts == sorted(counts)
        assert len(set(counts)) == 3


class TestParams:
    """Test parameter validation."""

    def test_valid(self):
        """Test accepted parameters."""
        assert params_of(1, 2).apex_degree == 8

    @pytest.mark.parametrize("alpha,beta", [(1, 3), (1, 4), (2, 6)])
    def test_bad_beta(self, alpha, beta):
        """Test beta residues other than 2."""
        with pytest.raises(ConstructionError, match="beta must be ≡ 2 \\(mod 3\\)"):
            params_of(alpha, beta)

    def test_bad_alpha(self):
        """Test alpha below 1."""
        with pytest.raises(ConstructionError):
            params_of(0, 2)


class TestFVector:
    """Test f-vector census."""

    def test_dodecahedron(self, dodeca):
        """Test an all-pentagon map."""
        assert f_vector(dodeca).format_line() == "f_5 = 12; f = 12"

    def test_g12(self, g12):
        """Test the generated map with q attached."""
        fv = f_vector(g12, q=5)
        assert fv.counts == {5: 22, 6: 1, 8: 5}
        assert fv.format_line() == "f_5 = 22; f_6 = 1; f_8 = 5; f = 28; q = 5"


class TestColouring:
    """Test exact vertex and face colouring."""

    def test_octahedron_three_colourable(self, octahedron):
        """Test that an even-degree triangulation needs only three colours."""
        colouring = vertex_colouring(octahedron, 3)

        assert colouring is not None
        for u, v in octahedron.edges:
            assert colouring[u] != colouring[v]
        assert not is_four_chromatic(octahedron)

    def test_tetrahedron_four_chromatic(self, tetra):
        """Test K4."""
        assert vertex_colouring(tetra, 3) is None
        assert is_four_chromatic(tetra)

    @pytest.mark.slow
    def test_g12_triangulation_four_chromatic(self, g12_triangulation):
        """Test that G' has chromatic number four."""
        assert is_four_chromatic(g12_triangulation)

    def test_ceiling(self):
        """Test that large triangulations need a higher ceiling."""
        with pytest.raises(CeilingExceededError, match="Vertex count"):
            is_four_chromatic(grinberg_triangulation(params_of(1, 5)))

    def test_face_colouring(self, cube_map):
        """Test a proper face colouring of the cube."""
        colours = face_colouring_of_dual(cube_map)

        assert set(colours.values()) <= {0, 1, 2, 3}
        for f, g in cube_map.edge_faces.values():
            assert colours[f] != colours[g]

    def test_face_colouring_ceiling(self, g12):
        """Test the face-count ceiling."""
        with pytest.raises(CeilingExceededError, match="Face count"):
            face_colouring_of_dual(g12, ceiling=10)


class TestBichromaticComponents:
    """Test two-colour subgraphs of four-coloured triangulations."""

    def test_hamiltonian_cut_leaves_two_trees(self, cube_map, octahedron):
        """Test that every cube cycle colours the octahedron into two trees."""
        for cycle in enumerate_hamiltonian_cycles(cube_map):
            colouring = colouring_from_hamiltonian_cycle(cube_map, cycle)
            splits = bichromatic_components(octahedron, colouring)

            first, second = splits[0]
            assert (first.colours, second.colours) == PAIR_SPLITS[0]
            assert first.is_tree and second.is_tree
            assert len(first.vertices) == len(second.vertices) == 3
            assert tree_split(octahedron, colouring) == (first, second)

    def test_cut_colouring_is_proper(self, dodeca):
        """Test the colouring induced on the icosahedron by a dodecahedron cycle."""
        cycle = enumerate_hamiltonian_cycles(dodeca, limit=1)[0]
        colouring = colouring_from_hamiltonian_cycle(dodeca, cycle)
        icosahedron = dual(dodeca)

        assert set(colouring.values()) == {0, 1, 2, 3}
        for u, v in icosahedron.edges:
            assert colouring[u] != colouring[v]
        assert tree_split(icosahedron, colouring) is not None

    def test_non_hamiltonian_dual_has_no_tree_split(self, g12_triangulation):
        """Test that no colour split of G' leaves two trees."""
        colouring = vertex_colouring(g12_triangulation, 4)
        assert colouring is not None

        for first, second in bichromatic_components(g12_triangulation, colouring):
            assert not (first.is_tree and second.is_tree)
        assert tree_split(g12_triangulation, colouring) is None

    def test_classification(self, octahedron):
        """Test an even cycle and a disconnected part in the octahedron."""
        colouring = vertex_colouring(octahedron, 3)
        assert colouring is not None

        first, second = bichromatic_components(octahedron, colouring)[0]
        assert (first.connected, first.has_even_cycle) == (True, True)
        assert (second.connected, second.has_even_cycle) == (False, False)
        assert not first.is_tree and not second.is_tree

    def test_improper_colouring_rejected(self, octahedron):
        """Test that two adjacent vertices of one colour are rejected."""
        with pytest.raises(ConstructionError, match="joins two vertices"):
            bichromatic_components(octahedron, {v: 0 for v in range(6)})

    def test_missing_vertex_rejected(self, octahedron):
        """Test that every vertex needs a colour."""
        with pytest.raises(ConstructionError, match="every vertex"):
            bichromatic_components(octahedron, {0: 0})
