"""Weight summaries, isobaric partitions and non-Hamiltonicity certificates."""

from dataclasses import dataclass
from typing import FrozenSet, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from isobar.models.planar_map import Edge

DisqualifyReason = Literal["not_2_regular", "disconnected", "misses_vertex"]


@dataclass(frozen=True)
class WeightSummary:
    """Totals over a set of faces.

    Attributes:
        nu: Number of faces considered
        sigma_total: Sum of boundary lengths
        s: Sum of weights, always sigma_total - 2 * nu
    """

    nu: int
    sigma_total: int
    s: int


@dataclass(frozen=True)
class IsobaricPartition:
    """Two-way split of the face set with equal weight on both sides.

    side_a is the side holding face 0.
    """

    side_a: FrozenSet[int]
    side_b: FrozenSet[int]
    s1: int
    s2: int
    border: FrozenSet[Edge]

    def __post_init__(self) -> None:
        if not self.side_a or not self.side_b:
            raise ValueError("Both sides of an isobaric partition must be nonempty")
        if self.side_a & self.side_b:
            raise ValueError("Partition sides must be disjoint")
        if self.s1 != self.s2:
            raise ValueError(f"Partition is not isobaric: {self.s1} != {self.s2}")


class PartitionRecord(BaseModel):
    """One isobaric partition inside an exhaustive certificate."""

    side_a: List[int] = Field(..., min_length=1)
    reason: DisqualifyReason

    @field_validator("side_a")
    @classmethod
    def sort_side(cls, v: List[int]) -> List[int]:
        """Keep face ids sorted and unique."""
        if len(set(v)) != len(v):
            raise ValueError("Face ids in a partition side must be unique")
        return sorted(v)


class Certificate(BaseModel):
    """Machine-checkable proof that a map has no Hamiltonian cycle.

    Examples:
        One special face (weights: one not divisible by three):
        {"kind": "case_a", "face": 17, "weight": 4}

        Three special faces around a vertex:
        {"kind": "case_b", "vertex": 3, "faces": [0, 4, 9]}

        Every isobaric partition, each with why its border is not a cycle:
        {"kind": "exhaustive", "partitions": [{"side_a": [0, 2], "reason": "disconnected"}]}
    """

    kind: Literal["case_a", "case_b", "exhaustive"]
    face: Optional[int] = Field(None, ge=0)
    weight: Optional[int] = None
    vertex: Optional[int] = Field(None, ge=0)
    faces: Optional[Tuple[int, int, int]] = None
    partitions: Optional[List[PartitionRecord]] = None

    @model_validator(mode="after")
    def validate_witness(self) -> "Certificate":
        """Ensure the witness fields match the certificate kind."""
        if self.kind == "case_a":
            if self.face is None or self.weight is None:
                raise ValueError("case_a certificate needs face and weight")
        elif self.kind == "case_b":
            if self.vertex is None or self.faces is None:
                raise ValueError("case_b certificate needs vertex and three faces")
            if len(set(self.faces)) != 3:
                raise ValueError("case_b faces must be distinct")
        elif self.partitions is None:
            raise ValueError("exhaustive certificate needs a partition list")
        return self

    def summary_line(self) -> str:
        """Single-line description printed by `isobar check`."""
        if self.kind == "case_a":
            return f"certificate: case_a face={self.face} weight={self.weight}"
        if self.kind == "case_b":
            assert self.faces is not None
            faces = ",".join(str(f) for f in self.faces)
            return f"certificate: case_b vertex={self.vertex} faces={faces}"
        assert self.partitions is not None
        return f"certificate: exhaustive partitions={len(self.partitions)}"
