"""Shared pytest fixtures for isobar tests."""

from typing import List, Tuple

import pytest

from isobar.builders.constructions import build_layers, grinberg_map, params_of
from isobar.builders.fixtures import cube, dodecahedron, tetrahedron, tutte
from isobar.models.construction import LayerState
from isobar.models.planar_map import PlanarMap, dual, from_faces


@pytest.fixture(scope="session")
def tetra() -> PlanarMap:
    """K4 embedded as a tetrahedron."""
    return tetrahedron()


@pytest.fixture(scope="session")
def cube_map() -> PlanarMap:
    """The cube: 8 vertices, 6 quadrilateral faces."""
    return cube()


@pytest.fixture(scope="session")
def dodeca() -> PlanarMap:
    """The dodecahedron: 20 vertices, 12 pentagonal faces."""
    return dodecahedron()


@pytest.fixture(scope="session")
def octahedron(cube_map) -> PlanarMap:
    """Dual of the cube, every vertex of degree 4."""
    return dual(cube_map)


@pytest.fixture(scope="session")
def tutte_map() -> PlanarMap:
    """Tutte's 46-vertex non-Hamiltonian cubic map."""
    return tutte()


@pytest.fixture(scope="session")
def g12_layers() -> Tuple[PlanarMap, List[LayerState]]:
    """Triangulation G' for alpha=1, beta=2 with its layer states."""
    return build_layers(params_of(1, 2))


@pytest.fixture(scope="session")
def g12_triangulation(g12_layers) -> PlanarMap:
    return g12_layers[0]


@pytest.fixture(scope="session")
def g12() -> PlanarMap:
    """The 52-vertex cubic map G for alpha=1, beta=2."""
    return grinberg_map(params_of(1, 2))


@pytest.fixture(scope="session")
def k24() -> PlanarMap:
    """K_{2,4}: poles 0 and 1, rim 2..5, four quadrilateral faces.

    Non-Hamiltonian with three isobaric partitions, none bordered by a
    Hamiltonian cycle.
    """
    rim = [2, 3, 4, 5]
    return from_faces(6, [(0, rim[i], 1, rim[(i + 1) % 4]) for i in range(4)])


@pytest.fixture(scope="session")
def subdivided_tetra() -> PlanarMap:
    """Tetrahedron with edge 0-1 subdivided twice and spokes 3-0, 3-1 once.

    Face weights are 3 (outer) and 5, 2, 2 around vertex 3, so the three
    faces at vertex 3 are the only ones off residue 0 and all are 2 mod 3.
    """
    return from_faces(
        8,
        [
            (0, 2, 1, 5, 4),
            (0, 4, 5, 1, 7, 3, 6),
            (1, 2, 3, 7),
            (2, 0, 6, 3),
        ],
    )


@pytest.fixture
def c4() -> PlanarMap:
    """A bare 4-cycle."""
    return PlanarMap(rotations=((1, 3), (0, 2), (1, 3), (0, 2)))

