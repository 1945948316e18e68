"""Sides of a cycle: inner and outer faces, chords, and the dual cut."""

from typing import FrozenSet, Sequence, Tuple, Union

import networkx as nx

from isobar.limits import IsobarError
from isobar.models.cycle import HamiltonianCycle
from isobar.models.planar_map import DualCut, Edge, PlanarMap, edge_key

CycleLike = Union[HamiltonianCycle, Sequence[int]]


class NotACycleError(IsobarError):
    """Raised when a vertex sequence is not a simple (or Hamiltonian) cycle of the map."""

    pass


def _vertices(cycle: CycleLike) -> Tuple[int, ...]:
    if isinstance(cycle, HamiltonianCycle):
        return cycle.vertices
    return tuple(cycle)


def cycle_edges(planar_map: PlanarMap, cycle: CycleLike) -> FrozenSet[Edge]:
    """Edges of a simple cycle of the map.

    Raises:
        NotACycleError: If the sequence is not a simple cycle of the map
    """
    vertices = _vertices(cycle)
    n = len(vertices)
    if n < 3:
        raise NotACycleError(f"A cycle needs at least 3 vertices, got {n}")
    if len(set(vertices)) != n:
        raise NotACycleError("Cycle repeats a vertex")
    for v in vertices:
        if not 0 <= v < planar_map.vertex_count:
            raise NotACycleError(f"Cycle names unknown vertex {v}")
    for i in range(n):
        u, v = vertices[i], vertices[(i + 1) % n]
        if not planar_map.has_edge(u, v):
            raise NotACycleError(f"Consecutive cycle vertices {u} and {v} are not adjacent")
    return frozenset(edge_key(vertices[i], vertices[(i + 1) % n]) for i in range(n))


def require_hamiltonian(planar_map: PlanarMap, cycle: CycleLike) -> FrozenSet[Edge]:
    """Edges of a Hamiltonian cycle of the map.

    Raises:
        NotACycleError: If the sequence is not a Hamiltonian cycle
    """
    edges = cycle_edges(planar_map, cycle)
    if len(edges) != planar_map.vertex_count:
        raise NotACycleError(
            f"Cycle has length {len(edges)} but the map has {planar_map.vertex_count} vertices"
        )
    return edges


def cycle_side_faces(
    planar_map: PlanarMap, cycle: CycleLike
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Split the faces into the inner side and the side holding the outer face.

    Returns:
        (inner faces, outer faces)

    Raises:
        NotACycleError: If the input is not a simple cycle
    """
    on_cycle = cycle_edges(planar_map, cycle)

    face_graph = nx.Graph()
    face_graph.add_nodes_from(range(len(planar_map.faces)))
    for edge, (f, g) in planar_map.edge_faces.items():
        if edge not in on_cycle:
            face_graph.add_edge(f, g)

    components = [frozenset(c) for c in nx.connected_components(face_graph)]
    if len(components) != 2:
        raise NotACycleError(
            f"Cycle splits the faces into {len(components)} regions, expected 2"
        )

    outer = next(c for c in components if planar_map.outer_face in c)
    inner = next(c for c in components if c is not outer)

    for edge in on_cycle:
        f, g = planar_map.edge_faces[edge]
        if (f in inner) == (g in inner):
            raise NotACycleError(f"Cycle edge {edge} has the same side on both banks")

    return inner, outer


def classify_chords(
    planar_map: PlanarMap, cycle: CycleLike
) -> Tuple[FrozenSet[Edge], FrozenSet[Edge]]:
    """Assign every edge off a Hamiltonian cycle to the inner or outer side.

    Returns:
        (inner chords, outer chords)
    """
    on_cycle = require_hamiltonian(planar_map, cycle)
    inner_faces, _ = cycle_side_faces(planar_map, cycle)

    inner, outer = set(), set()
    for edge in planar_map.edges:
        if edge in on_cycle:
            continue
        f, _ = planar_map.edge_faces[edge]
        (inner if f in inner_faces else outer).add(edge)
    return frozenset(inner), frozenset(outer)


def dual_cut_of_cycle(planar_map: PlanarMap, cycle: CycleLike) -> DualCut:
    """Dual edges crossing a Hamiltonian cycle and the two dual pieces they leave.

    For a Hamiltonian cycle both pieces are trees.

    Raises:
        NotACycleError: If the cycle is not Hamiltonian
    """
    on_cycle = require_hamiltonian(planar_map, cycle)
    inner_faces, outer_faces = cycle_side_faces(planar_map, cycle)

    cut = set()
    inner_edges, outer_edges = set(), set()
    for edge, (f, g) in planar_map.edge_faces.items():
        dual_edge = edge_key(f, g)
        if edge in on_cycle:
            cut.add(dual_edge)
        elif f in inner_faces:
            inner_edges.add(dual_edge)
        else:
            outer_edges.add(dual_edge)

    return DualCut(
        cut_edges=frozenset(cut),
        side_components=(
            (inner_faces, frozenset(inner_edges)),
            (outer_faces, frozenset(outer_edges)),
        ),
    )
