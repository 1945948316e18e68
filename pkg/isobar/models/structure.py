"""Results of structural analyses: edge cuts and 3H factorizations."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from isobar.models.cycle import HamiltonianCycle
from isobar.models.planar_map import Edge


@dataclass(frozen=True)
class EdgeCut:
    """A nontrivial edge cut and the two vertex sets it separates."""

    edges: Tuple[Edge, ...]
    sides: Tuple[FrozenSet[int], FrozenSet[int]]

    def format_line(self) -> str:
        """Edge pairs as printed by `isobar qconn`."""
        return " ".join(f"{u}-{v}" for u, v in self.edges)


@dataclass(frozen=True)
class QuasiConnectivity:
    """Minimum nontrivial edge cut size and every cut achieving it.

    q is None when the map has no nontrivial cut at all.
    """

    q: Optional[int]
    minimal_cuts: List[EdgeCut]


@dataclass(frozen=True)
class ThreeHFactorization:
    """A proper 3-edge-colouring whose colour pairs are Hamiltonian cycles.

    Attributes:
        edge_colors: Colour 0, 1 or 2 for every edge
        cycles: cycles[k] is the union of the two colour classes other than k
        face_colors: Nesting colour 0..3 of every face
        sigma: Total face weight per face colour
    """

    edge_colors: Dict[Edge, int]
    cycles: Tuple[HamiltonianCycle, HamiltonianCycle, HamiltonianCycle]
    face_colors: Dict[int, int]
    sigma: Tuple[int, int, int, int]
