"""Planar maps stored as rotation systems.

A map is a connected simple graph together with, for every vertex, the
counterclockwise cyclic order of its neighbours. Faces are the orbits of the
face-successor permutation on darts: the successor of dart (u, v) is (v, w)
where w immediately follows u in the rotation at v.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from isobar.limits import MAX_VERTEX_COUNT, IsobarError

Dart = Tuple[int, int]
Edge = Tuple[int, int]


class InvalidMapError(IsobarError):
    """Exception raised when a rotation system is not a valid planar map."""

    pass


def edge_key(u: int, v: int) -> Edge:
    """Return the undirected edge {u, v} as an ordered pair (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """A face of a planar map.

    Attributes:
        id: Position of the face in ascending order of minimal dart
        boundary: Darts of the face in successor order, starting at the minimal dart
    """

    id: int
    boundary: Tuple[Dart, ...]

    @property
    def length(self) -> int:
        """Number of boundary edges."""
        return len(self.boundary)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Boundary vertices in traversal order."""
        return tuple(d[0] for d in self.boundary)

    @property
    def edges(self) -> FrozenSet[Edge]:
        """Undirected boundary edges."""
        return frozenset(edge_key(u, v) for u, v in self.boundary)


@dataclass(frozen=True)
class DualCut:
    """The dual edges crossing a cycle, and the two dual pieces they separate.

    Attributes:
        cut_edges: Dual edges (pairs of face ids) crossing the cycle
        side_components: Dual subgraphs on the inner and outer side, as
            (face ids, dual edges) pairs
    """

    cut_edges: FrozenSet[Edge]
    side_components: Tuple[Tuple[FrozenSet[int], FrozenSet[Edge]], ...]

    def side_is_tree(self, index: int) -> bool:
        """Check whether one side component is a tree."""
        nodes, edges = self.side_components[index]
        graph = nx.Graph()
        graph.add_nodes_from(nodes)
        graph.add_edges_from(edges)
        return len(nodes) > 0 and nx.is_tree(graph)


@dataclass(frozen=True)
class PlanarMap:
    """A connected simple planar graph with a rotation system.

    Attributes:
        rotations: For each vertex, its neighbours in counterclockwise order
        outer_dart: A dart on the outer face, or None for the default outer
            face (the face of the smallest dart, i.e. face 0)
    """

    rotations: Tuple[Tuple[int, ...], ...]
    outer_dart: Optional[Dart] = field(default=None)

    def __post_init__(self) -> None:
        rotations = tuple(tuple(int(w) for w in rot) for rot in self.rotations)
        object.__setattr__(self, "rotations", rotations)
        self._validate()

        if self.outer_dart is not None:
            outer = (int(self.outer_dart[0]), int(self.outer_dart[1]))
            if outer not in self._face_of:
                raise InvalidMapError(f"Outer dart {outer} is not a dart of the map")
            object.__setattr__(self, "outer_dart", outer)

    # -- validation -----------------------------------------------------------

    def _validate(self) -> None:
        n = len(self.rotations)
        if n < 1:
            raise InvalidMapError("Map must have at least one vertex")
        if n > MAX_VERTEX_COUNT:
            raise InvalidMapError(
                f"Vertex count ({n}) exceeds maximum ({MAX_VERTEX_COUNT})"
            )

        for v, rot in enumerate(self.rotations):
            if len(rot) < 2:
                raise InvalidMapError(f"Vertex {v} has degree {len(rot)}; minimum is 2")
            if len(set(rot)) != len(rot):
                raise InvalidMapError(f"Vertex {v} lists a neighbour twice (multiedge)")
            for w in rot:
                if w == v:
                    raise InvalidMapError(f"Vertex {v} has a self-loop")
                if not 0 <= w < n:
                    raise InvalidMapError(f"Vertex {v} names unknown neighbour {w}")

        for v, rot in enumerate(self.rotations):
            for w in rot:
                if v not in self._position[w]:
                    raise InvalidMapError(
                        f"Asymmetric adjacency: {w} is in the rotation of {v} but not vice versa"
                    )

        if not nx.is_connected(self.graph):
            raise InvalidMapError("Map is disconnected")

        v_count = n
        e_count = len(self.edges)
        f_count = len(self.faces)
        if v_count - e_count + f_count != 2:
            raise InvalidMapError(
                f"Euler violation: V - E + F = {v_count} - {e_count} + {f_count} "
                f"= {v_count - e_count + f_count}, expected 2 (rotation is not planar)"
            )

    # -- basic structure --------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.rotations)

    def degree(self, v: int) -> int:
        """Degree of vertex v."""
        return len(self.rotations[v])

    @cached_property
    def _position(self) -> Tuple[Dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(rot)} for rot in self.rotations)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """Undirected edges as sorted (u, v) pairs with u < v."""
        return tuple(
            sorted({edge_key(v, w) for v, rot in enumerate(self.rotations) for w in rot})
        )

    @cached_property
    def graph(self) -> nx.Graph:
        """The underlying abstract graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.rotations)))
        graph.add_edges_from(
            (v, w) for v, rot in enumerate(self.rotations) for w in rot if v < w
        )
        return graph

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether u and v are adjacent."""
        return v in self._position[u]

    def successor(self, dart: Dart) -> Dart:
        """Face-successor of a dart: (u, v) -> (v, w), w following u at v."""
        u, v = dart
        rot = self.rotations[v]
        return (v, rot[(self._position[v][u] + 1) % len(rot)])

    def darts(self) -> List[Dart]:
        """All darts in ascending order."""
        return sorted((v, w) for v, rot in enumerate(self.rotations) for w in rot)

    # -- faces --------------------------------------------------------------------

    @cached_property
    def _face_data(self) -> Tuple[Tuple[Face, ...], Dict[Dart, int]]:
        face_of: Dict[Dart, int] = {}
        faces: List[Face] = []
        for start in self.darts():
            if start in face_of:
                continue
            boundary = []
            dart = start
            while dart not in face_of:
                face_of[dart] = len(faces)
                boundary.append(dart)
                dart = self.successor(dart)
            if dart != start:
                # successor is a permutation, so the orbit must close at its start
                raise InvalidMapError(f"Face traversal from {start} did not close")
            faces.append(Face(id=len(faces), boundary=tuple(boundary)))
        return tuple(faces), face_of

    @property
    def faces(self) -> Tuple[Face, ...]:
        """Faces in ascending order of their minimal dart."""
        return self._face_data[0]

    @property
    def _face_of(self) -> Dict[Dart, int]:
        return self._face_data[1]

    def face_of(self, dart: Dart) -> int:
        """Id of the face whose boundary contains the dart."""
        return self._face_of[dart]

    @property
    def outer_face(self) -> int:
        """Id of the designated outer face."""
        if self.outer_dart is None:
            return 0
        return self._face_of[self.outer_dart]

    def with_outer_face(self, face_id: int) -> "PlanarMap":
        """Same rotation system with another face designated as outer."""
        return PlanarMap(
            rotations=self.rotations, outer_dart=self.faces[face_id].boundary[0]
        )

    @cached_property
    def edge_faces(self) -> Dict[Edge, Tuple[int, int]]:
        """For each edge (u, v), the faces of darts (u, v) and (v, u)."""
        return {(u, v): (self._face_of[(u, v)], self._face_of[(v, u)]) for u, v in self.edges}

    def faces_at(self, v: int) -> Tuple[int, ...]:
        """Faces around vertex v, one per outgoing dart, in rotation order."""
        return tuple(self._face_of[(v, w)] for w in self.rotations[v])


def faces(planar_map: PlanarMap) -> List[Face]:
    """List the faces of a map in ascending order of minimal dart."""
    return list(planar_map.faces)


def from_faces(
    vertex_count: int,
    face_cycles: Iterable[Sequence[int]],
    outer_dart: Optional[Dart] = None,
) -> PlanarMap:
    """Build a map from consistently oriented face cycles.

    Each cycle lists a face counterclockwise (interior on the left) and every
    directed edge must occur in exactly one cycle. At vertex u_i of a cycle
    (..., u_{i-1}, u_i, u_{i+1}, ...), u_{i-1} follows u_{i+1} in the rotation.

    Raises:
        InvalidMapError: If a dart repeats or a rotation does not close
    """
    follows: List[Dict[int, int]] = [dict() for _ in range(vertex_count)]
    seen: set = set()

    for cycle in face_cycles:
        k = len(cycle)
        for i in range(k):
            dart = (cycle[i], cycle[(i + 1) % k])
            if dart in seen:
                raise InvalidMapError(f"Dart {dart} appears in two face cycles")
            seen.add(dart)
            centre = cycle[i]
            after, before = cycle[(i + 1) % k], cycle[i - 1]
            if after in follows[centre]:
                raise InvalidMapError(f"Rotation at {centre} is ambiguous after {after}")
            follows[centre][after] = before

    rotations = []
    for v, nxt in enumerate(follows):
        if not nxt:
            raise InvalidMapError(f"Vertex {v} lies on no face")
        start = min(nxt)
        rot = [start]
        w = nxt[start]
        while w != start:
            rot.append(w)
            if len(rot) > len(nxt) or w not in nxt:
                raise InvalidMapError(f"Rotation at vertex {v} does not close")
            w = nxt[w]
        if len(rot) != len(nxt):
            raise InvalidMapError(f"Rotation at vertex {v} splits into several cycles")
        rotations.append(tuple(rot))

    return PlanarMap(rotations=tuple(rotations), outer_dart=outer_dart)


def dual(planar_map: PlanarMap) -> PlanarMap:
    """Dual map: one vertex per face, rotation following the face boundary.

    Raises:
        InvalidMapError: If two faces share more than one edge or an edge has
            the same face on both sides (the dual would not be simple)
    """
    rotations = []
    for face in planar_map.faces:
        across = [planar_map.face_of((v, u)) for u, v in face.boundary]
        if face.id in across:
            raise InvalidMapError(
                f"Face {face.id} lies on both sides of an edge; dual has a loop"
            )
        if len(set(across)) != len(across):
            raise InvalidMapError(
                f"Face {face.id} shares several edges with one face; dual has a multiedge"
            )
        rotations.append(tuple(across))
    return PlanarMap(rotations=tuple(rotations))


def canonical_code(planar_map: PlanarMap) -> Tuple[int, ...]:
    """Orientation-preserving canonical code of a map.

    Relabels vertices breadth-first from every dart, reading rotations from
    the dart each vertex was reached by, and keeps the smallest code. Two
    maps have equal codes iff they are isomorphic as oriented maps.
    """
    best: Optional[Tuple[int, ...]] = None
    for root, first in planar_map.darts():
        code = _code_from(planar_map, root, first)
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def _code_from(planar_map: PlanarMap, root: int, first: int) -> Tuple[int, ...]:
    label = {root: 0}
    entry = {root: first}
    order = [root]
    code: List[int] = [planar_map.vertex_count]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        rot = planar_map.rotations[v]
        start = rot.index(entry[v])
        code.append(len(rot))
        for k in range(len(rot)):
            w = rot[(start + k) % len(rot)]
            if w not in label:
                label[w] = len(order)
                entry[w] = v
                order.append(w)
            code.append(label[w])
    return tuple(code)
