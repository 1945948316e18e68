"""Builder for the (alpha, beta) family of non-Hamiltonian cubic maps.

The triangulation G' is grown outwards from a hub x:

1. x is joined to a cycle C_0 of length 3^alpha * beta, and the strip between
   C_0 and an equally long C_1 is triangulated in a zigzag.
2. Each annulus layer cuts the current outer cycle into triples and glues a
   fixed gadget onto every triple. Inner triples end with degrees 8, 5, 8 and
   the new outer cycle is 4/3 as long.
3. An apex z is joined to every vertex of the last cycle.

Every vertex other than x and z has degree 5 or 8, and the degree of z is
congruent to 2 modulo 3. In the dual cubic map the face of x is therefore the
only face whose weight is not a multiple of three.

All triangles are listed counterclockwise, so each directed edge belongs to
exactly one triangle and the rotation system follows from from_faces.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
from pydantic import ValidationError

from isobar.evaluators.sides import CycleLike, dual_cut_of_cycle
from isobar.limits import DEFAULT_COLORING_CEILING, IsobarError, check_ceiling
from isobar.models.construction import BichromaticPart, ConstructionParams, FVector, LayerState
from isobar.models.planar_map import PlanarMap, dual, from_faces

Triangle = Tuple[int, int, int]


class ConstructionError(IsobarError):
    """Exception raised when construction parameters or inputs are invalid."""

    pass


@dataclass(frozen=True)
class PartialTriangulation:
    """A triangulated disk grown around the hub.

    Attributes:
        vertex_count: Number of vertices used so far (ids 0 .. vertex_count-1)
        triangles: Counterclockwise triangles of the disk
        boundary: The current outer cycle; its darts in ascending order are
            still free
        rings: Every cycle C_1, C_2, ... added so far, the last being boundary
    """

    vertex_count: int
    triangles: Tuple[Triangle, ...]
    boundary: Tuple[int, ...]
    rings: Tuple[Tuple[int, ...], ...]

    @cached_property
    def neighbours(self) -> Dict[int, Set[int]]:
        adjacency: Dict[int, Set[int]] = {v: set() for v in range(self.vertex_count)}
        for a, b, c in self.triangles:
            adjacency[a].update((b, c))
            adjacency[b].update((a, c))
            adjacency[c].update((a, b))
        return adjacency

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def inside_edges(self, v: int) -> int:
        """Edges from a boundary vertex to the interior of the disk."""
        return self.degree(v) - 2

    def capped(self) -> PlanarMap:
        """Close the disk with an apex joined to every boundary vertex."""
        z = self.vertex_count
        ring = self.boundary
        k = len(ring)
        apex = [(ring[j], ring[(j + 1) % k], z) for j in range(k)]
        return from_faces(self.vertex_count + 1, list(self.triangles) + apex)


def zigzag_disk(length: int) -> PartialTriangulation:
    """Hub x = 0 joined to C_0, with the zigzag strip between C_0 and C_1.

    Raises:
        ConstructionError: If length < 3
    """
    if length < 3:
        raise ConstructionError(f"Zigzag disk needs length >= 3, got {length}")

    c0 = [1 + i for i in range(length)]
    c1 = [1 + length + i for i in range(length)]
    triangles: List[Triangle] = []
    for i in range(length):
        j = (i + 1) % length
        triangles.append((0, c0[j], c0[i]))
        triangles.append((c0[i], c0[j], c1[i]))
        triangles.append((c0[j], c1[j], c1[i]))

    return PartialTriangulation(
        vertex_count=1 + 2 * length,
        triangles=tuple(triangles),
        boundary=tuple(c1),
        rings=(tuple(c1),),
    )


def _gadget(a: List[int], b: List[int], p: int, q: int, r: int) -> List[Triangle]:
    # a: A0..A3 on the inner cycle, b: B0..B4 on the outer one
    return [
        (a[0], a[1], p),
        (a[1], a[2], p),
        (a[2], q, p),
        (a[2], b[2], q),
        (b[2], b[1], q),
        (b[1], r, q),
        (b[1], b[0], r),
        (b[0], a[0], r),
        (a[0], p, r),
        (p, q, r),
        (a[2], b[3], b[2]),
        (a[2], a[3], b[3]),
        (a[3], b[4], b[3]),
    ]


def annulus_layer(disk: PartialTriangulation) -> PartialTriangulation:
    """Glue one annulus onto the disk, turning a boundary of 3m into 4m.

    Per triple of the inner cycle the annulus adds three interior vertices
    of degree 5 and four outer vertices, with 23 edges.

    Raises:
        ConstructionError: If the boundary length is not a multiple of 3 or a
            boundary vertex does not have exactly 2 inside edges
    """
    inner = list(disk.boundary)
    if len(inner) % 3:
        raise ConstructionError(
            f"Annulus layer needs a boundary length divisible by 3, got {len(inner)}"
        )
    for v in inner:
        if disk.inside_edges(v) != 2:
            raise ConstructionError(
                f"Boundary vertex {v} has {disk.inside_edges(v)} inside edges, expected 2"
            )

    m = len(inner) // 3
    gadget_start = disk.vertex_count
    outer = [gadget_start + 3 * m + j for j in range(4 * m)]

    triangles = list(disk.triangles)
    for k in range(m):
        p, q, r = gadget_start + 3 * k, gadget_start + 3 * k + 1, gadget_start + 3 * k + 2
        a = [inner[(3 * k + j) % (3 * m)] for j in range(4)]
        b = [outer[(4 * k + j) % (4 * m)] for j in range(5)]
        triangles.extend(_gadget(a, b, p, q, r))

    return PartialTriangulation(
        vertex_count=gadget_start + 7 * m,
        triangles=tuple(triangles),
        boundary=tuple(outer),
        rings=disk.rings + (tuple(outer),),
    )


def build_layers(params: ConstructionParams) -> Tuple[PlanarMap, List[LayerState]]:
    """Build G' and report the state of every layer cycle C_1 .. C_{alpha+1}."""
    disk = zigzag_disk(params.hub_degree)
    for _ in range(params.alpha):
        disk = annulus_layer(disk)
    triangulation = disk.capped()

    layers = []
    for i, ring in enumerate(disk.rings, start=1):
        # ring ids come after everything they enclose
        floor = min(ring)
        inside = tuple(
            sum(1 for w in triangulation.rotations[v] if w < floor) for v in ring
        )
        layers.append(
            LayerState(
                index=i,
                cycle=ring,
                expected_length=params.layer_length(i),
                inside_edges=inside,
            )
        )
    return triangulation, layers


def grinberg_triangulation(params: ConstructionParams) -> PlanarMap:
    """The triangulation G' for (alpha, beta)."""
    return build_layers(params)[0]


def grinberg_map(params: ConstructionParams) -> PlanarMap:
    """The cubic map G, dual of G'."""
    return dual(grinberg_triangulation(params))


def params_of(alpha: int, beta: int) -> ConstructionParams:
    """Validated parameters.

    Raises:
        ConstructionError: If alpha < 1 or beta is not congruent to 2 mod 3
    """
    try:
        return ConstructionParams(alpha=alpha, beta=beta)
    except ValidationError as e:
        messages = [err["msg"].removeprefix("Value error, ") for err in e.errors()]
        raise ConstructionError("; ".join(messages))


def f_vector(planar_map: PlanarMap, q: Optional[int] = None) -> FVector:
    """Census of faces by boundary length."""
    counts: Dict[int, int] = {}
    for face in planar_map.faces:
        counts[face.length] = counts.get(face.length, 0) + 1
    return FVector(counts=dict(sorted(counts.items())), f=len(planar_map.faces), q=q)


# -- exact colouring ---------------------------------------------------------------


def vertex_colouring(planar_map: PlanarMap, k: int) -> Optional[Dict[int, int]]:
    """A proper vertex colouring with colours 0 .. k-1, or None if none exists.

    Exact backtracking: the next vertex is the one seeing the most colours
    among its coloured neighbours (ties: highest degree, then lowest id), and a
    new colour is only opened one above the highest in use.
    """
    n = planar_map.vertex_count
    colour = [-1] * n
    rotations = planar_map.rotations

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colour[v] != -1:
                continue
            seen = {colour[w] for w in rotations[v] if colour[w] != -1}
            key = (-len(seen), -len(rotations[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def place(done: int, top: int) -> bool:
        if done == n:
            return True
        v = pick()
        blocked = {colour[w] for w in rotations[v]}
        for c in range(min(k, top + 2)):
            if c in blocked:
                continue
            colour[v] = c
            if place(done + 1, max(top, c)):
                return True
        colour[v] = -1
        return False

    if not place(0, -1):
        return None
    return dict(enumerate(colour))


def is_four_chromatic(
    triangulation: PlanarMap, ceiling: Optional[int] = DEFAULT_COLORING_CEILING
) -> bool:
    """Check that the chromatic number is exactly 4.

    Raises:
        CeilingExceededError: If the map has more vertices than the ceiling
    """
    if ceiling is not None:
        check_ceiling(triangulation.vertex_count, ceiling, "Vertex count")
    if vertex_colouring(triangulation, 3) is not None:
        return False
    return vertex_colouring(triangulation, 4) is not None


def face_colouring_of_dual(
    planar_map: PlanarMap, ceiling: Optional[int] = DEFAULT_COLORING_CEILING
) -> Dict[int, int]:
    """A proper four-colouring of the faces, from a vertex colouring of the dual.

    Raises:
        CeilingExceededError: If the map has more faces than the ceiling
        ConstructionError: If no four-colouring is found
    """
    if ceiling is not None:
        check_ceiling(len(planar_map.faces), ceiling, "Face count")
    colouring = vertex_colouring(dual(planar_map), 4)
    if colouring is None:
        raise ConstructionError("Faces admit no four-colouring")
    return colouring


# -- bichromatic components -----------------------------------------------------

PAIR_SPLITS: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = (
    ((0, 1), (2, 3)),
    ((0, 2), (1, 3)),
    ((0, 3), (1, 2)),
)


def _bichromatic_part(
    triangulation: PlanarMap, colouring: Dict[int, int], colours: Tuple[int, int]
) -> BichromaticPart:
    vertices = frozenset(v for v, c in colouring.items() if c in colours)
    sub = triangulation.graph.subgraph(vertices)
    return BichromaticPart(
        colours=colours,
        vertices=vertices,
        connected=bool(vertices) and nx.is_connected(sub),
        has_even_cycle=not nx.is_forest(sub) if vertices else False,
    )


def bichromatic_components(
    triangulation: PlanarMap, colouring: Dict[int, int]
) -> List[Tuple[BichromaticPart, BichromaticPart]]:
    """Both two-colour subgraphs for each of the three ways to pair four colours.

    When both parts of a split are trees the edges between them form a bond
    whose dual is a Hamiltonian cycle of the dual map, so a triangulation
    dual to a non-Hamiltonian map has no such split under any colouring.

    Raises:
        ConstructionError: If the colouring is not a proper colouring with
            colours 0 .. 3 of every vertex
    """
    if set(colouring) != set(range(triangulation.vertex_count)):
        raise ConstructionError("Colouring must assign every vertex a colour")
    if any(c not in range(4) for c in colouring.values()):
        raise ConstructionError("Colouring must use colours 0 .. 3")
    for u, v in triangulation.edges:
        if colouring[u] == colouring[v]:
            raise ConstructionError(f"Edge {u}-{v} joins two vertices of colour {colouring[u]}")
    return [
        (
            _bichromatic_part(triangulation, colouring, a),
            _bichromatic_part(triangulation, colouring, b),
        )
        for a, b in PAIR_SPLITS
    ]


def tree_split(
    triangulation: PlanarMap, colouring: Dict[int, int]
) -> Optional[Tuple[BichromaticPart, BichromaticPart]]:
    """First colour split whose two parts are both trees, or None."""
    for a, b in bichromatic_components(triangulation, colouring):
        if a.is_tree and b.is_tree:
            return a, b
    return None


def colouring_from_hamiltonian_cycle(planar_map: PlanarMap, cycle: CycleLike) -> Dict[int, int]:
    """Proper four-colouring of the dual's vertices induced by a Hamiltonian cycle.

    The cycle cuts the dual into two trees. The faces inside get colours 0 and
    1 and the faces outside get 2 and 3, alternating along each tree.

    Raises:
        NotACycleError: If the cycle is not Hamiltonian
    """
    cut = dual_cut_of_cycle(planar_map, cycle)
    colouring: Dict[int, int] = {}
    for offset, (nodes, edges) in zip((0, 2), cut.side_components):
        tree = nx.Graph()
        tree.add_nodes_from(nodes)
        tree.add_edges_from(edges)
        for face, side in nx.bipartite.color(tree).items():
            colouring[face] = offset + side
    return colouring


__all__ = [
    "ConstructionError",
    "PartialTriangulation",
    "PAIR_SPLITS",
    "annulus_layer",
    "bichromatic_components",
    "build_layers",
    "colouring_from_hamiltonian_cycle",
    "f_vector",
    "face_colouring_of_dual",
    "grinberg_map",
    "grinberg_triangulation",
    "is_four_chromatic",
    "params_of",
    "tree_split",
    "vertex_colouring",
    "zigzag_disk",
]
