"""Quasi-connectivity: the size of the smallest nontrivial edge cut.

A cut is nontrivial when removing it leaves exactly two components with at
least three vertices each. Cuts are searched by increasing size k. A minimal
cut C of size k is a bond, so for its highest-indexed edge e the graph
G - (C - e) stays connected and e is one of its bridges. The search therefore
walks (k-1)-edge subsets P in index order, abandons any P that already
disconnects the graph, and reads the candidate cuts off the bridges of G - P
whose index exceeds every index in P. Each cut is met exactly once.
"""

from typing import List, Optional, Sequence

import networkx as nx

from isobar.limits import DEFAULT_CUT_CEILING, CeilingExceededError
from isobar.models.planar_map import Edge, PlanarMap, edge_key
from isobar.models.structure import EdgeCut, QuasiConnectivity

MIN_SIDE = 3


class InconclusiveError(CeilingExceededError):
    """Raised when no nontrivial cut exists up to the cut-size ceiling."""

    pass


def is_map(planar_map: PlanarMap) -> bool:
    """Check whether the graph is cubic and bridgeless."""
    if any(planar_map.degree(v) != 3 for v in range(planar_map.vertex_count)):
        return False
    return not nx.has_bridges(planar_map.graph)


def _cut_of(graph: nx.Graph, cut: Sequence[Edge]) -> Optional[EdgeCut]:
    view = nx.restricted_view(graph, [], list(cut))
    components = sorted((frozenset(c) for c in nx.connected_components(view)), key=min)
    if len(components) != 2:
        return None
    a, b = components
    if len(a) < MIN_SIDE or len(b) < MIN_SIDE:
        return None
    # every edge has to cross, otherwise a smaller cut does the same job
    for u, v in cut:
        if (u in a) == (v in a):
            return None
    return EdgeCut(edges=tuple(sorted(cut)), sides=(a, b))


def _cuts_of_size(graph: nx.Graph, edges: Sequence[Edge], k: int) -> List[EdgeCut]:
    index = {e: i for i, e in enumerate(edges)}
    found: List[EdgeCut] = []

    def extend(prefix: List[int], start: int) -> None:
        removed = [edges[i] for i in prefix]
        view = nx.restricted_view(graph, [], removed)
        if prefix and not nx.is_connected(view):
            return
        if len(prefix) == k - 1:
            floor = prefix[-1] if prefix else -1
            for u, v in nx.bridges(view):
                i = index[edge_key(u, v)]
                if i > floor:
                    cut = _cut_of(graph, removed + [edges[i]])
                    if cut is not None:
                        found.append(cut)
            return
        for i in range(start, len(edges)):
            prefix.append(i)
            extend(prefix, i + 1)
            prefix.pop()

    extend([], 0)
    found.sort(key=lambda c: c.edges)
    return found


def quasi_connectivity(
    planar_map: PlanarMap, cut_size_ceiling: int = DEFAULT_CUT_CEILING
) -> QuasiConnectivity:
    """Exact quasi-connectivity with every minimal nontrivial cut.

    Args:
        planar_map: Map to analyse
        cut_size_ceiling: Largest cut size tried

    Returns:
        QuasiConnectivity; q is None when the map has fewer than six
        vertices or provably no nontrivial cut

    Raises:
        InconclusiveError: No cut up to the ceiling and the search was not exhaustive
    """
    if planar_map.vertex_count < 2 * MIN_SIDE:
        return QuasiConnectivity(q=None, minimal_cuts=[])

    graph = planar_map.graph
    edges = list(planar_map.edges)
    top = min(cut_size_ceiling, len(edges))
    for k in range(1, top + 1):
        cuts = _cuts_of_size(graph, edges, k)
        if cuts:
            return QuasiConnectivity(q=k, minimal_cuts=cuts)

    if top == len(edges):
        return QuasiConnectivity(q=None, minimal_cuts=[])
    raise InconclusiveError(
        f"No nontrivial cut of size <= {cut_size_ceiling}; raise --ceiling to continue",
        cut_size_ceiling,
    )

