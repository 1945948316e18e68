"""3H structure of cubic maps and the equal-weight face colouring it induces.

A cubic map is a 3H-graph when its edges can be coloured 0, 1, 2 properly so
that every two colour classes together form a Hamiltonian cycle. Colouring
each face by which of those cycles it lies within then gives four face
classes of equal total weight.
"""

from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from isobar.evaluators.grinberg import (
    certificate_case_a,
    certificate_case_b,
    face_weights,
    verify_grinberg_identity,
)
from isobar.evaluators.sides import CycleLike, cycle_side_faces, require_hamiltonian
from isobar.limits import DEFAULT_THREEH_BUDGET, BudgetExhaustedError, IsobarError
from isobar.models.cycle import HamiltonianCycle
from isobar.models.planar_map import Edge, PlanarMap
from isobar.models.structure import ThreeHFactorization

COLOURS = (0, 1, 2)


class NotCubicError(IsobarError):
    """Raised when a 3H search is asked for on a map that is not cubic."""

    pass


class ImproperColouringError(IsobarError):
    """Raised when two faces sharing an edge carry the same colour."""

    pass


class _ColouringState:
    """Partial edge colouring with path fragments for each pair of colours.

    Pair k is the union of the colours other than k; its fragments must stay
    paths until a closing edge completes a cycle through every vertex.
    """

    def __init__(self, n: int, m: int) -> None:
        self.colour = [-1] * m
        self.used = [0] * n
        self.end = [list(range(n)) for _ in COLOURS]
        self.size = [[1] * n for _ in COLOURS]

    def copy(self) -> "_ColouringState":
        other = _ColouringState.__new__(_ColouringState)
        other.colour = self.colour[:]
        other.used = self.used[:]
        other.end = [e[:] for e in self.end]
        other.size = [s[:] for s in self.size]
        return other


class _FactorizationSearch:
    def __init__(self, planar_map: PlanarMap, budget: Optional[int]) -> None:
        self.n = planar_map.vertex_count
        self.edges: List[Edge] = list(planar_map.edges)
        self.incident: List[List[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            self.incident[u].append(i)
            self.incident[v].append(i)
        self.budget = budget
        self.expansions = 0

    def assign(self, state: _ColouringState, e: int, c: int) -> bool:
        u, v = self.edges[e]
        bit = 1 << c
        if state.used[u] & bit or state.used[v] & bit:
            return False
        for pair in COLOURS:
            if pair == c:
                continue
            end, size = state.end[pair], state.size[pair]
            if end[u] == v:
                if size[u] != self.n:
                    return False
            else:
                a, b = end[u], end[v]
                end[a], end[b] = b, a
                size[a] = size[b] = size[u] + size[v]
        state.colour[e] = c
        state.used[u] |= bit
        state.used[v] |= bit
        return True

    def _available(self, state: _ColouringState, e: int) -> List[int]:
        u, v = self.edges[e]
        taken = state.used[u] | state.used[v]
        return [c for c in COLOURS if not taken >> c & 1]

    def _next_edge(self, state: _ColouringState) -> Optional[Tuple[int, List[int]]]:
        best: Optional[Tuple[int, List[int]]] = None
        for e, c in enumerate(state.colour):
            if c != -1:
                continue
            options = self._available(state, e)
            if best is None or len(options) < len(best[1]):
                best = (e, options)
                if not options:
                    break
        return best

    def run(self, state: _ColouringState) -> Optional[_ColouringState]:
        self.expansions += 1
        if self.budget is not None and self.expansions > self.budget:
            raise BudgetExhaustedError(
                f"3H search exhausted its budget of {self.budget} expansions",
                self.budget,
                self.expansions,
            )
        choice = self._next_edge(state)
        if choice is None:
            return state
        e, options = choice
        for c in options:
            child = state.copy()
            if self.assign(child, e, c):
                found = self.run(child)
                if found is not None:
                    return found
        return None

    def root(self) -> Optional[_ColouringState]:
        # colours are interchangeable, so vertex 0's edges get 0, 1, 2 in order
        state = _ColouringState(self.n, len(self.edges))
        for c, e in enumerate(self.incident[0]):
            if not self.assign(state, e, c):
                return None
        return state


def _cycle_from_edges(edges: Sequence[Edge], n: int) -> HamiltonianCycle:
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    order = [0]
    prev, current = -1, 0
    while len(order) < n:
        step = adjacency[current][0] if adjacency[current][0] != prev else adjacency[current][1]
        order.append(step)
        prev, current = current, step
    return HamiltonianCycle.from_sequence(order)


def _sigma(planar_map: PlanarMap, face_colors: Dict[int, int]) -> Tuple[int, int, int, int]:
    weights = face_weights(planar_map)
    sums = [0, 0, 0, 0]
    for face, colour in face_colors.items():
        sums[colour] += weights[face]
    return (sums[0], sums[1], sums[2], sums[3])


def find_3h_factorization(
    planar_map: PlanarMap, budget: Optional[int] = DEFAULT_THREEH_BUDGET
) -> Optional[ThreeHFactorization]:
    """First 3H edge colouring in search order, or None when the map has none.

    Raises:
        NotCubicError: If some vertex does not have degree 3
        BudgetExhaustedError: The budget ran out before the search space did
    """
    for v in range(planar_map.vertex_count):
        if planar_map.degree(v) != 3:
            raise NotCubicError(f"Vertex {v} has degree {planar_map.degree(v)}; 3H needs a cubic map")

    # a certified non-Hamiltonian map has no Hamiltonian colour pair
    if certificate_case_a(planar_map) is not None or certificate_case_b(planar_map) is not None:
        return None

    search = _FactorizationSearch(planar_map, budget)
    root = search.root()
    found = search.run(root) if root is not None else None
    if found is None:
        return None

    edge_colors = {edge: found.colour[i] for i, edge in enumerate(search.edges)}
    cycles = tuple(
        _cycle_from_edges([e for e, c in edge_colors.items() if c != k], planar_map.vertex_count)
        for k in COLOURS
    )
    face_colors = face_nesting_colors(planar_map, cycles)
    return ThreeHFactorization(
        edge_colors=edge_colors,
        cycles=(cycles[0], cycles[1], cycles[2]),
        face_colors=face_colors,
        sigma=_sigma(planar_map, face_colors),
    )


def face_nesting_colors(planar_map: PlanarMap, cycles: Sequence[CycleLike]) -> Dict[int, int]:
    """Colour every face by which of the three cycles it lies within.

    Seen from the outer face, every face lies inside either none of the
    cycles or exactly two of them. A face inside none gets colour 0; a face
    outside only cycle k gets colour 1 + k.

    Raises:
        NotACycleError: If a cycle is not Hamiltonian
        ImproperColouringError: If a face lies inside one or three cycles
    """
    inside: Dict[int, List[int]] = {face.id: [] for face in planar_map.faces}
    for k, cycle in enumerate(cycles):
        require_hamiltonian(planar_map, cycle)
        inner, _ = cycle_side_faces(planar_map, cycle)
        for f in inner:
            inside[f].append(k)

    colours: Dict[int, int] = {}
    for f, within in inside.items():
        if not within:
            colours[f] = 0
            continue
        outside = [k for k in range(len(cycles)) if k not in within]
        if len(outside) != 1:
            raise ImproperColouringError(
                f"Face {f} lies inside {len(within)} of {len(cycles)} cycles"
            )
        colours[f] = 1 + outside[0]
    return colours


def edge_color_from_face_colors(i: int, j: int) -> int:
    """Colour |i + j - 3| of an edge between faces coloured i and j.

    Raises:
        ImproperColouringError: If i == j
    """
    if i == j:
        raise ImproperColouringError(f"Adjacent faces share colour {i}")
    return abs(i + j - 3)


def induced_edge_colouring(planar_map: PlanarMap, face_colors: Dict[int, int]) -> Dict[Edge, int]:
    """Apply the |i + j - 3| rule to every edge."""
    return {
        edge: edge_color_from_face_colors(face_colors[f], face_colors[g])
        for edge, (f, g) in planar_map.edge_faces.items()
    }


def matching_permutation(
    induced: Dict[Edge, int], edge_colors: Dict[Edge, int]
) -> Optional[Tuple[int, int, int]]:
    """Colour renaming p with induced[e] == p[edge_colors[e]] for every edge, if any."""
    for perm in permutations(COLOURS):
        if all(induced[e] == perm[c] for e, c in edge_colors.items()):
            return (perm[0], perm[1], perm[2])
    return None


def verify_corollary(planar_map: PlanarMap, factorization: ThreeHFactorization) -> bool:
    """Check that the four face colour classes have equal total weight.

    Recomputes sigma from the face colours and also replays the three
    relations behind it: each cycle of the factorization has two colour
    classes on either side, and both sides weigh h - 2.
    """
    colours = factorization.face_colors
    for f, g in planar_map.edge_faces.values():
        if colours[f] == colours[g]:
            return False

    sigma = _sigma(planar_map, colours)
    if len(set(sigma)) != 1:
        return False

    for cycle in factorization.cycles:
        s1, s2, holds = verify_grinberg_identity(planar_map, cycle)
        if not holds:
            return False
        inner, outer = cycle_side_faces(planar_map, cycle)
        inner_colours = {colours[f] for f in inner}
        outer_colours = {colours[f] for f in outer}
        if len(inner_colours) != 2 or len(outer_colours) != 2 or inner_colours & outer_colours:
            return False
        if sum(sigma[c] for c in inner_colours) != s1:
            return False
        if sum(sigma[c] for c in outer_colours) != s2:
            return False
    return True


__all__ = [
    "ImproperColouringError",
    "NotCubicError",
    "edge_color_from_face_colors",
    "face_nesting_colors",
    "find_3h_factorization",
    "induced_edge_colouring",
    "matching_permutation",
    "verify_corollary",
]
