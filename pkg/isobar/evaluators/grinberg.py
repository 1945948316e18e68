"""Grinberg face weights, isobaric partitions and non-Hamiltonicity certificates.

The weight of a face is its boundary length minus two. For a Hamiltonian
cycle of length h in a plane embedding, the faces inside it and the faces
outside it each weigh h - 2 in total, so a Hamiltonian cycle is always the
border of some isobaric partition (equal total weight on both sides).
Certificates record why no such border can exist.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Literal, Optional, Sequence, Tuple

import networkx as nx

from isobar.evaluators.sides import (
    CycleLike,
    classify_chords,
    cycle_side_faces,
    require_hamiltonian,
)
from isobar.limits import DEFAULT_EXHAUSTIVE_CEILING, check_ceiling
from isobar.models.certificate import (
    Certificate,
    DisqualifyReason,
    IsobaricPartition,
    PartitionRecord,
    WeightSummary,
)
from isobar.models.cycle import HamiltonianCycle
from isobar.models.planar_map import Edge, Face, PlanarMap

WeightPattern = Literal["case_a", "case_b_candidate", "unconstrained"]

__all__ = [
    "ChordReplay",
    "border_disqualification",
    "certificate_case_a",
    "certificate_case_b",
    "certify_non_hamiltonian",
    "check_certificate",
    "classify_chords",
    "decide_non_hamiltonian",
    "enumerate_isobaric_partitions",
    "face_weight",
    "face_weights",
    "find_border_cycle",
    "has_isobaric_split",
    "partition_border",
    "replay_chord_restoration",
    "verify_grinberg_identity",
    "weight_pattern",
    "weight_summary",
]


def face_weight(face: Face) -> int:
    """Weight of a face: boundary length minus two."""
    if face.length < 3:
        raise ValueError(f"Face {face.id} has length {face.length}; weights need length >= 3")
    return face.length - 2


def face_weights(planar_map: PlanarMap) -> List[int]:
    """Weights of all faces, indexed by face id."""
    return [face_weight(face) for face in planar_map.faces]


def weight_summary(faces: Iterable[Face]) -> WeightSummary:
    """Count, total boundary length and total weight of some faces."""
    nu = 0
    sigma_total = 0
    for face in faces:
        nu += 1
        sigma_total += face.length
    return WeightSummary(nu=nu, sigma_total=sigma_total, s=sigma_total - 2 * nu)


def verify_grinberg_identity(
    planar_map: PlanarMap, cycle: CycleLike
) -> Tuple[int, int, bool]:
    """Inner and outer weight sums of a Hamiltonian cycle.

    Returns:
        (s1, s2, holds) with holds true iff s1 == s2 == h - 2. A false value
        means the face or side computation is wrong.
    """
    edges = require_hamiltonian(planar_map, cycle)
    inner, outer = cycle_side_faces(planar_map, cycle)
    s1 = weight_summary(planar_map.faces[f] for f in inner).s
    s2 = weight_summary(planar_map.faces[f] for f in outer).s
    h = len(edges)
    return s1, s2, s1 == s2 == h - 2


# -- chord restoration -------------------------------------------------------------


@dataclass(frozen=True)
class ChordReplay:
    """Trace of rebuilding both sides of a Hamiltonian cycle chord by chord.

    Attributes:
        steps: (nu, sigma, s) of the inner side and of the outer side, first
            for the bare cycle and then after each restored chord
        regions_match_faces: Whether the final regions are exactly the faces
            reported by cycle_side_faces
    """

    steps: List[Tuple[WeightSummary, WeightSummary]]
    regions_match_faces: bool


def _split_region(regions: List[List[int]], a: int, b: int) -> None:
    for index, region in enumerate(regions):
        if a in region and b in region:
            i, j = region.index(a), region.index(b)
            if i > j:
                i, j = j, i
            first = region[i : j + 1]
            second = region[j:] + region[: i + 1]
            regions[index : index + 1] = [first, second]
            return
    raise ValueError(f"Chord {a}-{b} does not lie inside a single region")


def _summary_of(regions: List[List[int]]) -> WeightSummary:
    sigma = sum(len(r) for r in regions)
    return WeightSummary(nu=len(regions), sigma_total=sigma, s=sigma - 2 * len(regions))


def replay_chord_restoration(planar_map: PlanarMap, cycle: CycleLike) -> ChordReplay:
    """Remove every chord, then put them back one at a time.

    Each restored chord splits one region of its side in two: nu grows by one
    and sigma by two, so the side weight s never moves from h - 2.
    """
    require_hamiltonian(planar_map, cycle)
    vertices = list(cycle.vertices if isinstance(cycle, HamiltonianCycle) else cycle)
    inner_chords, outer_chords = classify_chords(planar_map, cycle)
    inner_faces, outer_faces = cycle_side_faces(planar_map, cycle)

    inner: List[List[int]] = [list(vertices)]
    outer: List[List[int]] = [list(vertices)]
    steps = [(_summary_of(inner), _summary_of(outer))]

    for a, b in sorted(inner_chords):
        _split_region(inner, a, b)
        steps.append((_summary_of(inner), _summary_of(outer)))
    for a, b in sorted(outer_chords):
        _split_region(outer, a, b)
        steps.append((_summary_of(inner), _summary_of(outer)))

    def as_sets(regions: List[List[int]]) -> List[FrozenSet[int]]:
        return sorted((frozenset(r) for r in regions), key=sorted)

    def face_sets(ids: Iterable[int]) -> List[FrozenSet[int]]:
        return sorted((frozenset(planar_map.faces[f].vertices) for f in ids), key=sorted)

    matches = as_sets(inner) == face_sets(inner_faces) and as_sets(outer) == face_sets(
        outer_faces
    )
    return ChordReplay(steps=steps, regions_match_faces=matches)


# -- isobaric partitions ---------------------------------------------------------------


def _subset_sums(weights: Sequence[int], target: int, limit: Optional[int]) -> List[Tuple[int, ...]]:
    """All index sets containing index 0 whose weights sum to target.

    Depth-first, including each index before excluding it, which yields the
    sets in lexicographic order. A reachability table prunes dead branches.
    """
    n = len(weights)
    # reach[i] is a bitmask of sums attainable from weights[i:]
    reach = [0] * (n + 1)
    reach[n] = 1
    for i in range(n - 1, -1, -1):
        reach[i] = reach[i + 1] | (reach[i + 1] << weights[i])

    found: List[Tuple[int, ...]] = []
    chosen: List[int] = [0]

    def descend(i: int, remaining: int) -> bool:
        if limit is not None and len(found) >= limit:
            return False
        if remaining == 0:
            found.append(tuple(chosen))
            return True
        if i == n or not (reach[i] >> remaining) & 1:
            return True
        w = weights[i]
        if w <= remaining and (reach[i + 1] >> (remaining - w)) & 1:
            chosen.append(i)
            keep_going = descend(i + 1, remaining - w)
            chosen.pop()
            if not keep_going:
                return False
        return descend(i + 1, remaining)

    if n and weights[0] <= target:
        descend(1, target - weights[0])
    return found


def _border(planar_map: PlanarMap, side_a: FrozenSet[int]) -> FrozenSet[Edge]:
    return frozenset(
        edge
        for edge, (f, g) in planar_map.edge_faces.items()
        if (f in side_a) != (g in side_a)
    )


def enumerate_isobaric_partitions(
    planar_map: PlanarMap,
    limit: Optional[int] = None,
    ceiling: Optional[int] = DEFAULT_EXHAUSTIVE_CEILING,
) -> List[IsobaricPartition]:
    """All splits of the faces into two nonempty sides of equal weight.

    Each partition is listed once, with face 0 on side_a, in lexicographic
    order of side_a.

    Args:
        planar_map: Map whose faces are split
        limit: Stop after this many partitions
        ceiling: Largest face count enumerated without a limit (None: no ceiling)

    Raises:
        CeilingExceededError: Too many faces and no limit given
    """
    weights = face_weights(planar_map)
    if limit is None:
        check_ceiling(len(weights), ceiling, "Face count")

    total = sum(weights)
    if total % 2 or total == 0:
        return []

    everything = frozenset(range(len(weights)))
    partitions = []
    for subset in _subset_sums(weights, total // 2, limit):
        side_a = frozenset(subset)
        side_b = everything - side_a
        if not side_b:
            continue
        partitions.append(
            IsobaricPartition(
                side_a=side_a,
                side_b=side_b,
                s1=total // 2,
                s2=total // 2,
                border=_border(planar_map, side_a),
            )
        )
    return partitions


def partition_border(planar_map: PlanarMap, partition: IsobaricPartition) -> FrozenSet[Edge]:
    """Edges with one incident face on each side of the partition."""
    return _border(planar_map, frozenset(partition.side_a))


def border_disqualification(
    planar_map: PlanarMap, border: Iterable[Edge]
) -> Optional[DisqualifyReason]:
    """Why a border is not a Hamiltonian cycle, or None when it is one.

    Checks run in a fixed order: a vertex of border degree other than 0 or 2,
    then a vertex the border misses, then a disconnected border.
    """
    border = list(border)
    degree = [0] * planar_map.vertex_count
    for u, v in border:
        degree[u] += 1
        degree[v] += 1
    if any(d not in (0, 2) for d in degree):
        return "not_2_regular"
    if any(d == 0 for d in degree):
        return "misses_vertex"
    graph = nx.Graph(border)
    if not nx.is_connected(graph):
        return "disconnected"
    return None


def _border_to_cycle(border: Iterable[Edge]) -> HamiltonianCycle:
    graph = nx.Graph(list(border))
    start = min(graph.nodes)
    order = [start]
    prev, current = None, start
    while True:
        step = min(w for w in graph.neighbors(current) if w != prev)
        if step == start:
            break
        order.append(step)
        prev, current = current, step
    return HamiltonianCycle.from_sequence(order)


def _scan_partitions(
    planar_map: PlanarMap, ceiling: Optional[int]
) -> Tuple[List[PartitionRecord], Optional[HamiltonianCycle]]:
    records = []
    for partition in enumerate_isobaric_partitions(planar_map, ceiling=ceiling):
        reason = border_disqualification(planar_map, partition.border)
        if reason is None:
            return records, _border_to_cycle(partition.border)
        records.append(PartitionRecord(side_a=sorted(partition.side_a), reason=reason))
    return records, None


def find_border_cycle(
    planar_map: PlanarMap, ceiling: Optional[int] = DEFAULT_EXHAUSTIVE_CEILING
) -> Optional[HamiltonianCycle]:
    """First isobaric partition whose border is a Hamiltonian cycle, as a cycle."""
    return _scan_partitions(planar_map, ceiling)[1]


# -- certificates --------------------------------------------------------------------


def _off_residue_faces(weights: Sequence[int]) -> List[int]:
    return [f for f, w in enumerate(weights) if w % 3 != 0]


def certificate_case_a(planar_map: PlanarMap) -> Optional[Certificate]:
    """Certificate for a map with exactly one face weight not divisible by three.

    Any split puts that face on one side, so only one side's weight is
    divisible by three and the sides can never balance.
    """
    weights = face_weights(planar_map)
    special = _off_residue_faces(weights)
    if len(special) != 1:
        return None
    face = special[0]
    return Certificate(kind="case_a", face=face, weight=weights[face])


def _case_b_vertex(planar_map: PlanarMap, faces: Sequence[int]) -> Optional[int]:
    wanted = set(faces)
    for x in range(planar_map.vertex_count):
        around = planar_map.faces_at(x)
        if len(around) == 3 and set(around) == wanted:
            return x
    return None


def certificate_case_b(planar_map: PlanarMap) -> Optional[Certificate]:
    """Certificate for three special faces meeting at one vertex.

    The three faces have congruent weights, none divisible by three, and every
    other weight is divisible by three. Balancing the sides forces the three
    onto one side, so no border reaches their common vertex.
    """
    weights = face_weights(planar_map)
    special = _off_residue_faces(weights)
    if len(special) != 3:
        return None
    if len({weights[f] % 3 for f in special}) != 1:
        return None
    x = _case_b_vertex(planar_map, special)
    if x is None:
        return None
    return Certificate(kind="case_b", vertex=x, faces=tuple(sorted(special)))


def certify_non_hamiltonian(
    planar_map: PlanarMap,
    ceiling: Optional[int] = DEFAULT_EXHAUSTIVE_CEILING,
    fast: bool = True,
) -> Optional[Certificate]:
    """Try case a, case b, then every isobaric partition.

    Returns None when some partition's border is a Hamiltonian cycle: the map
    is then Hamiltonian, witnessed by find_border_cycle.

    Args:
        planar_map: Map to certify
        ceiling: Largest face count for the exhaustive route (None: no ceiling)
        fast: Try the case a and case b certificates first

    Raises:
        CeilingExceededError: The exhaustive route would exceed the ceiling
    """
    return decide_non_hamiltonian(planar_map, ceiling=ceiling, fast=fast)[0]


def decide_non_hamiltonian(
    planar_map: PlanarMap,
    ceiling: Optional[int] = DEFAULT_EXHAUSTIVE_CEILING,
    fast: bool = True,
) -> Tuple[Optional[Certificate], Optional[HamiltonianCycle]]:
    """Like certify_non_hamiltonian, but also return the border cycle found.

    Exactly one of the two is set: a certificate, or the first isobaric
    border that is a Hamiltonian cycle. The partitions are scanned once.

    Raises:
        CeilingExceededError: The exhaustive route would exceed the ceiling
    """
    if fast:
        for attempt in (certificate_case_a, certificate_case_b):
            certificate = attempt(planar_map)
            if certificate is not None:
                return certificate, None

    records, cycle = _scan_partitions(planar_map, ceiling)
    if cycle is not None:
        return None, cycle
    return Certificate(kind="exhaustive", partitions=records), None


def check_certificate(planar_map: PlanarMap, certificate: Certificate) -> bool:
    """Re-verify a certificate from the raw map, independent of how it was made."""
    weights = face_weights(planar_map)
    face_count = len(weights)

    if certificate.kind == "case_a":
        face = certificate.face
        if face is None or not 0 <= face < face_count:
            return False
        if weights[face] != certificate.weight or weights[face] % 3 == 0:
            return False
        return all(w % 3 == 0 for f, w in enumerate(weights) if f != face)

    if certificate.kind == "case_b":
        x, special = certificate.vertex, certificate.faces
        if x is None or special is None or not 0 <= x < planar_map.vertex_count:
            return False
        if any(not 0 <= f < face_count for f in special):
            return False
        residues = {weights[f] % 3 for f in special}
        if len(residues) != 1 or 0 in residues:
            return False
        if any(w % 3 != 0 for f, w in enumerate(weights) if f not in special):
            return False
        around = planar_map.faces_at(x)
        return len(around) == 3 and set(around) == set(special)

    claimed: Dict[Tuple[int, ...], str] = {}
    for record in certificate.partitions or []:
        key = tuple(record.side_a)
        if key in claimed:
            return False
        claimed[key] = record.reason

    actual = enumerate_isobaric_partitions(planar_map, ceiling=None)
    if len(actual) != len(claimed):
        return False
    for partition in actual:
        key = tuple(sorted(partition.side_a))
        if key not in claimed:
            return False
        reason = border_disqualification(planar_map, partition.border)
        if reason is None or reason != claimed[key]:
            return False
    return True


# -- weight multisets -------------------------------------------------------------------


def has_isobaric_split(weights: Sequence[int]) -> bool:
    """Whether a weight multiset splits into two nonempty parts of equal sum."""
    total = sum(weights)
    if total % 2 or total == 0:
        return False
    reachable = 1
    for w in weights:
        reachable |= reachable << w
    # with positive weights a subset summing to half is proper and nonempty
    return bool((reachable >> (total // 2)) & 1)


def weight_pattern(weights: Sequence[int]) -> WeightPattern:
    """Classify a weight multiset by the residues that drive the fast certificates."""
    off = [w % 3 for w in weights if w % 3 != 0]
    if len(off) == 1:
        return "case_a"
    if len(off) == 3 and len(set(off)) == 1:
        return "case_b_candidate"
    return "unconstrained"
