"""Map builders: the non-Hamiltonian family and named fixtures."""

from isobar.builders.constructions import (
    ConstructionError,
    bichromatic_components,
    build_layers,
    colouring_from_hamiltonian_cycle,
    f_vector,
    grinberg_map,
    grinberg_triangulation,
    is_four_chromatic,
    params_of,
    tree_split,
)
from isobar.builders.fixtures import FIXTURES, UnknownFixtureError, fixture

__all__ = [
    "FIXTURES",
    "ConstructionError",
    "UnknownFixtureError",
    "bichromatic_components",
    "build_layers",
    "colouring_from_hamiltonian_cycle",
    "f_vector",
    "fixture",
    "grinberg_map",
    "grinberg_triangulation",
    "is_four_chromatic",
    "params_of",
    "tree_split",
]
