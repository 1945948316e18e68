"""Hamiltonian cycle value type."""

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from isobar.models.planar_map import Edge, edge_key


def canonical_rotation(vertices: Sequence[int]) -> Tuple[int, ...]:
    """Rotate and orient a cyclic vertex sequence into canonical form.

    The canonical form starts at the minimal vertex and its second vertex is
    smaller than its last, which removes rotation and reflection duplicates.
    """
    seq = list(vertices)
    if len(seq) < 3:
        return tuple(seq)
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if seq[1] > seq[-1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


@dataclass(frozen=True)
class HamiltonianCycle:
    """A cycle through every vertex of a map exactly once.

    Attributes:
        vertices: Vertex sequence in canonical form
    """

    vertices: Tuple[int, ...]

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> "HamiltonianCycle":
        """Create a cycle from any rotation or orientation of its vertex sequence."""
        return cls(vertices=canonical_rotation(vertices))

    @property
    def h(self) -> int:
        """Length of the cycle."""
        return len(self.vertices)

    @property
    def edges(self) -> FrozenSet[Edge]:
        """Undirected edges of the cycle."""
        n = len(self.vertices)
        return frozenset(
            edge_key(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)
        )

    def format_line(self) -> str:
        """Whitespace-separated vertex list, as printed by the CLI."""
        return " ".join(str(v) for v in self.vertices)

    def __str__(self) -> str:
        return self.format_line()
