"""Named reference maps."""

from typing import Callable, Dict, List, Tuple

import networkx as nx

from isobar.limits import IsobarError
from isobar.models.planar_map import PlanarMap, from_faces


class UnknownFixtureError(IsobarError):
    """Raised for a fixture name that is not defined."""

    pass


def tetrahedron() -> PlanarMap:
    return from_faces(4, [(0, 2, 1), (0, 1, 3), (1, 2, 3), (2, 0, 3)])


def cube() -> PlanarMap:
    """Bottom square 0-1-2-3, top square 4-5-6-7, vertex i below vertex i+4."""
    return from_faces(
        8,
        [
            (0, 3, 2, 1),
            (4, 5, 6, 7),
            (0, 1, 5, 4),
            (1, 2, 6, 5),
            (2, 3, 7, 6),
            (3, 0, 4, 7),
        ],
    )


def dodecahedron() -> PlanarMap:
    """Outer pentagon 0..4, middle 10-cycle 5..14, inner pentagon 15..19.

    Outer vertex i is joined to middle vertex 5 + 2i, inner vertex 15 + i to
    middle vertex 6 + 2i.
    """

    def o(i: int) -> int:
        return i % 5

    def m(j: int) -> int:
        return 5 + j % 10

    def n(i: int) -> int:
        return 15 + i % 5

    faces: List[Tuple[int, ...]] = [tuple(n(i) for i in range(5))]
    for i in range(5):
        faces.append((o(i), o(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)))
        faces.append((m(2 * i + 1), m(2 * i + 2), m(2 * i + 3), n(i + 1), n(i)))
    faces.append(tuple(o(i) for i in range(4, -1, -1)))
    return from_faces(20, faces)


def tutte() -> PlanarMap:
    """Tutte's 46-vertex cubic non-Hamiltonian graph with its planar embedding.

    The embedding is unique up to reflection since the graph is 3-connected;
    networkx reports clockwise neighbour orders, which are reversed here.
    """
    graph = nx.tutte_graph()
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        raise IsobarError("networkx reports the Tutte graph as non-planar")
    rotations = tuple(
        tuple(reversed(list(embedding.neighbors_cw_order(v))))
        for v in range(graph.number_of_nodes())
    )
    return PlanarMap(rotations=rotations)


FIXTURES: Dict[str, Callable[[], PlanarMap]] = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "tutte": tutte,
}


def fixture(name: str) -> PlanarMap:
    """Build a named fixture.

    Raises:
        UnknownFixtureError: If the name is not one of FIXTURES
    """
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(
            f"Unknown fixture '{name}'. Known fixtures: {', '.join(sorted(FIXTURES))}"
        )
    return builder()
