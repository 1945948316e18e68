"""Parameters and census records for the generated map family."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from pydantic import BaseModel, Field, field_validator


class ConstructionParams(BaseModel):
    """Parameters (alpha, beta) of the non-Hamiltonian map family.

    alpha is the number of annulus layers; beta scales every cycle length
    and must be congruent to 2 modulo 3 so that the apex degree 4^alpha * beta
    is too.

    Example:
        {"alpha": 1, "beta": 2}  ->  52-vertex cubic map
    """

    model_config = {"frozen": True}

    alpha: int = Field(..., ge=1, description="Number of annulus layers")
    beta: int = Field(..., ge=1, description="Cycle length multiplier, 2 mod 3")

    @field_validator("beta")
    @classmethod
    def validate_beta_residue(cls, v: int) -> int:
        """Ensure beta is congruent to 2 modulo 3."""
        if v % 3 != 2:
            raise ValueError("beta must be ≡ 2 (mod 3)")
        return v

    @property
    def hub_degree(self) -> int:
        """Degree of the hub x, the length of C_0 and C_1."""
        return 3**self.alpha * self.beta

    @property
    def apex_degree(self) -> int:
        """Degree of the apex z, the length of C_{alpha+1}."""
        return 4**self.alpha * self.beta

    def layer_length(self, i: int) -> int:
        """Expected length of cycle C_i for 1 <= i <= alpha + 1."""
        return 3 ** (self.alpha - i + 1) * 4 ** (i - 1) * self.beta


@dataclass(frozen=True)
class LayerState:
    """One layer cycle C_i of a generated triangulation.

    Attributes:
        index: Layer index i (1 .. alpha + 1)
        cycle: Vertices of C_i in cyclic order
        expected_length: 3^(alpha-i+1) * 4^(i-1) * beta
        inside_edges: For each vertex of C_i, the number of edges to vertices
            strictly inside C_i
    """

    index: int
    cycle: Tuple[int, ...]
    expected_length: int
    inside_edges: Tuple[int, ...]

    @property
    def length_ok(self) -> bool:
        return len(self.cycle) == self.expected_length

    @property
    def inside_edges_ok(self) -> bool:
        return all(k == 2 for k in self.inside_edges)


@dataclass(frozen=True)
class FVector:
    """Census of faces by number of boundary vertices.

    Attributes:
        counts: f_i keyed by boundary length i
        f: Total number of faces
        q: Quasi-connectivity, when it has been computed
    """

    counts: Dict[int, int]
    f: int
    q: Optional[int] = None

    def format_line(self) -> str:
        """Caption-style rendering, e.g. `f_5 = 12; f = 12`."""
        parts = [f"f_{i} = {self.counts[i]}" for i in sorted(self.counts)]
        parts.append(f"f = {self.f}")
        if self.q is not None:
            parts.append(f"q = {self.q}")
        return "; ".join(parts)


@dataclass(frozen=True)
class BichromaticPart:
    """The subgraph induced by the vertices of two colours.

    Attributes:
        colours: The two colours, ascending
        vertices: Vertices carrying either colour
        connected: Whether the subgraph is connected
        has_even_cycle: Whether it contains a cycle; every cycle of a
            two-coloured subgraph is even
    """

    colours: Tuple[int, int]
    vertices: FrozenSet[int]
    connected: bool
    has_even_cycle: bool

    @property
    def is_tree(self) -> bool:
        return self.connected and not self.has_even_cycle
