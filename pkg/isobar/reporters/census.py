"""Summary figures of a map, as shown by `isobar census`."""

from dataclasses import dataclass
from typing import Dict, Optional

from isobar.builders.constructions import f_vector, face_colouring_of_dual
from isobar.evaluators.grinberg import face_weights, weight_pattern
from isobar.models.construction import FVector
from isobar.models.planar_map import PlanarMap


@dataclass(frozen=True)
class MapCensus:
    """Counts, weights and (optionally) a face colouring of one map.

    Attributes:
        vertices, edges, faces: V, E and F
        weights: Number of faces per weight
        total_weight: Sum of all face weights
        cubic: Whether every vertex has degree 3
        pattern: Residue pattern of the weights (see weight_pattern)
        f_vector: Faces by boundary length
        colours: Face id to colour 0..3, when requested
    """

    vertices: int
    edges: int
    faces: int
    weights: Dict[int, int]
    total_weight: int
    cubic: bool
    pattern: str
    f_vector: FVector
    colours: Optional[Dict[int, int]] = None

    @property
    def euler_weight_ok(self) -> Optional[bool]:
        """For cubic maps, whether the total weight is 2(V - 2)."""
        if not self.cubic:
            return None
        return self.total_weight == 2 * (self.vertices - 2)


def map_census(planar_map: PlanarMap, colours: bool = False) -> MapCensus:
    """Compute the census of a map.

    Raises:
        CeilingExceededError: If colours are requested for too many faces
    """
    weights = face_weights(planar_map)
    by_weight: Dict[int, int] = {}
    for w in weights:
        by_weight[w] = by_weight.get(w, 0) + 1
    return MapCensus(
        vertices=planar_map.vertex_count,
        edges=len(planar_map.edges),
        faces=len(planar_map.faces),
        weights=dict(sorted(by_weight.items())),
        total_weight=sum(weights),
        cubic=all(planar_map.degree(v) == 3 for v in range(planar_map.vertex_count)),
        pattern=weight_pattern(weights),
        f_vector=f_vector(planar_map),
        colours=face_colouring_of_dual(planar_map) if colours else None,
    )
