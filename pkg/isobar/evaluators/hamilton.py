"""Exact backtracking search for Hamiltonian cycles.

The search decides edges rather than extending a single path. Every edge is
undecided, in or out; after each decision the constraints are propagated:

- a vertex with two edges in has all its other edges out;
- a vertex with exactly two edges not out has both of them in;
- a vertex with fewer than two edges not out fails the branch;
- an edge closing a path fragment before it covers every vertex is out.

Branching takes a fragment endpoint with the fewest undecided edges and
tries each of them in neighbour order. The branches are disjoint, so every
cycle is found exactly once.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from isobar.limits import DEFAULT_HAMILTON_BUDGET, BudgetExhaustedError
from isobar.models.cycle import HamiltonianCycle, canonical_rotation
from isobar.models.planar_map import PlanarMap, edge_key

UNDECIDED, IN, OUT = 0, 1, -1


@dataclass
class _State:
    """Mutable search state; copied on every branch."""

    status: List[int]
    in_degree: List[int]
    free_degree: List[int]
    end: List[int]
    size: List[int]
    in_count: int = 0
    closed: bool = False

    def copy(self) -> "_State":
        return _State(
            status=self.status[:],
            in_degree=self.in_degree[:],
            free_degree=self.free_degree[:],
            end=self.end[:],
            size=self.size[:],
            in_count=self.in_count,
            closed=self.closed,
        )


@dataclass
class SearchStats:
    """Node expansions spent by a search."""

    expansions: int = 0


@dataclass
class _Graph:
    n: int
    edges: List[Tuple[int, int]]
    incident: List[List[int]]  # edge indices per vertex, by neighbour id
    index: dict = field(default_factory=dict)

    @classmethod
    def of(cls, planar_map: PlanarMap) -> "_Graph":
        edges = list(planar_map.edges)
        index = {e: i for i, e in enumerate(edges)}
        incident = []
        for v in range(planar_map.vertex_count):
            nbrs = sorted(planar_map.rotations[v])
            incident.append([index[edge_key(v, w)] for w in nbrs])
        return cls(n=planar_map.vertex_count, edges=edges, incident=incident, index=index)


class _Search:
    def __init__(self, planar_map: PlanarMap, budget: Optional[int]) -> None:
        self.graph = _Graph.of(planar_map)
        self.budget = budget
        self.stats = SearchStats()

    def initial(self) -> Optional[_State]:
        g = self.graph
        state = _State(
            status=[UNDECIDED] * len(g.edges),
            in_degree=[0] * g.n,
            free_degree=[len(g.incident[v]) for v in range(g.n)],
            end=list(range(g.n)),
            size=[1] * g.n,
        )
        if not self._propagate(state, list(range(g.n))):
            return None
        return state

    # -- propagation ---------------------------------------------------------

    def _exclude(self, state: _State, e: int, queue: List[int]) -> bool:
        if state.status[e] != UNDECIDED:
            return state.status[e] == OUT
        state.status[e] = OUT
        for v in self.graph.edges[e]:
            state.free_degree[v] -= 1
            queue.append(v)
        return True

    def _include(self, state: _State, e: int, queue: List[int]) -> bool:
        if state.status[e] != UNDECIDED:
            return state.status[e] == IN
        u, v = self.graph.edges[e]
        if state.in_degree[u] >= 2 or state.in_degree[v] >= 2:
            return False
        n = self.graph.n

        if state.end[u] == v:
            # closes the fragment u..v into a cycle
            if state.size[u] != n:
                return False
            state.closed = True
        else:
            a, b = state.end[u], state.end[v]
            total = state.size[u] + state.size[v]
            state.end[a], state.end[b] = b, a
            state.size[a] = state.size[b] = total
            if total < n:
                # for two single vertices the closing edge is e itself
                closing = self.graph.index.get(edge_key(a, b))
                if closing is not None and closing != e and state.status[closing] == UNDECIDED:
                    if not self._exclude(state, closing, queue):
                        return False

        state.status[e] = IN
        state.in_count += 1
        state.in_degree[u] += 1
        state.in_degree[v] += 1
        queue.append(u)
        queue.append(v)
        return True

    def _propagate(self, state: _State, queue: List[int]) -> bool:
        while queue:
            v = queue.pop()
            if state.in_degree[v] > 2 or state.free_degree[v] < 2:
                return False
            undecided = [e for e in self.graph.incident[v] if state.status[e] == UNDECIDED]
            if not undecided:
                continue
            if state.in_degree[v] == 2:
                for e in undecided:
                    if not self._exclude(state, e, queue):
                        return False
            elif state.free_degree[v] == 2:
                for e in undecided:
                    if not self._include(state, e, queue):
                        return False
        return True

    # -- branching ---------------------------------------------------------------

    def _pick_vertex(self, state: _State) -> Optional[int]:
        best, best_key = None, None
        for v in range(self.graph.n):
            if state.in_degree[v] == 2:
                continue
            undecided = state.free_degree[v] - state.in_degree[v]
            # fragment endpoints first, then fewest undecided edges
            key = (0 if state.in_degree[v] == 1 else 1, undecided, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def children(self, state: _State) -> List[_State]:
        """States reached by deciding one more edge at the chosen vertex."""
        v = self._pick_vertex(state)
        if v is None:
            return []
        kids = []
        tried: List[int] = []
        for e in self.graph.incident[v]:
            if state.status[e] != UNDECIDED:
                continue
            child = state.copy()
            queue: List[int] = []
            ok = all(self._exclude(child, f, queue) for f in tried)
            ok = ok and self._include(child, e, queue) and self._propagate(child, queue)
            tried.append(e)
            if ok:
                kids.append(child)
        return kids

    def expand(self) -> None:
        self.stats.expansions += 1
        if self.budget is not None and self.stats.expansions > self.budget:
            raise BudgetExhaustedError(
                f"Hamiltonian search exhausted its budget of {self.budget} expansions",
                self.budget,
                self.stats.expansions,
            )

    def cycle_of(self, state: _State) -> HamiltonianCycle:
        g = self.graph
        adjacency: List[List[int]] = [[] for _ in range(g.n)]
        for e, s in enumerate(state.status):
            if s == IN:
                a, b = g.edges[e]
                adjacency[a].append(b)
                adjacency[b].append(a)
        order = [0]
        prev, current = -1, 0
        while len(order) < g.n:
            step = adjacency[current][0] if adjacency[current][0] != prev else adjacency[current][1]
            order.append(step)
            prev, current = current, step
        return HamiltonianCycle.from_sequence(order)

    def run(self, state: _State, collect: List[HamiltonianCycle], limit: Optional[int]) -> bool:
        """Depth-first search below state; returns False once limit cycles are collected."""
        self.expand()
        if state.closed:
            collect.append(self.cycle_of(state))
            return limit is None or len(collect) < limit
        for child in self.children(state):
            if not self.run(child, collect, limit):
                return False
        return True


def _trivially_absent(planar_map: PlanarMap) -> bool:
    return planar_map.vertex_count < 3


def find_hamiltonian_cycle(
    planar_map: PlanarMap,
    budget: Optional[int] = DEFAULT_HAMILTON_BUDGET,
    stats: Optional[SearchStats] = None,
) -> Optional[HamiltonianCycle]:
    """First Hamiltonian cycle in search order, or None when none exists.

    Raises:
        BudgetExhaustedError: The budget ran out before the search space did
    """
    found = _search(planar_map, budget, limit=1, stats=stats)
    return found[0] if found else None


def _search(
    planar_map: PlanarMap,
    budget: Optional[int],
    limit: Optional[int],
    stats: Optional[SearchStats] = None,
) -> List[HamiltonianCycle]:
    if _trivially_absent(planar_map):
        return []
    search = _Search(planar_map, budget)
    if stats is not None:
        search.stats = stats
    collect: List[HamiltonianCycle] = []
    root = search.initial()
    if root is not None:
        search.run(root, collect, limit)
    return collect


def _enumerate_branch(args: Tuple[PlanarMap, int, Optional[int]]) -> List[HamiltonianCycle]:
    planar_map, branch, budget = args
    search = _Search(planar_map, budget)
    root = search.initial()
    if root is None:
        return []
    collect: List[HamiltonianCycle] = []
    search.run(search.children(root)[branch], collect, None)
    return collect


def enumerate_hamiltonian_cycles(
    planar_map: PlanarMap,
    limit: Optional[int] = None,
    budget: Optional[int] = DEFAULT_HAMILTON_BUDGET,
    threads: int = 1,
) -> List[HamiltonianCycle]:
    """All Hamiltonian cycles in canonical form and lexicographic order.

    Args:
        planar_map: Map to search
        limit: Keep only the first `limit` cycles of the sorted list
        budget: Node-expansion budget (per top-level branch when threads > 1)
        threads: Worker processes for the top-level branches

    Raises:
        BudgetExhaustedError: The budget ran out before the search space did
    """
    if threads > 1 and not _trivially_absent(planar_map):
        search = _Search(planar_map, budget)
        root = search.initial()
        if root is None:
            return []
        branches = len(search.children(root))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_enumerate_branch, [(planar_map, b, budget) for b in range(branches)])
            cycles = [c for part in parts for c in part]
    else:
        cycles = _search(planar_map, budget, limit=None)
    cycles.sort(key=lambda c: c.vertices)
    return cycles if limit is None else cycles[:limit]


def is_hamiltonian_cycle(planar_map: PlanarMap, candidate: Sequence[int]) -> bool:
    """Check a vertex sequence against every Hamiltonian-cycle condition on this map."""
    vertices = list(candidate)
    n = planar_map.vertex_count
    if len(vertices) != n or n < 3:
        return False
    if sorted(vertices) != list(range(n)):
        return False
    return all(
        planar_map.has_edge(vertices[i], vertices[(i + 1) % n]) for i in range(n)
    )


__all__ = [
    "SearchStats",
    "canonical_rotation",
    "enumerate_hamiltonian_cycles",
    "find_hamiltonian_cycle",
    "is_hamiltonian_cycle",
]
