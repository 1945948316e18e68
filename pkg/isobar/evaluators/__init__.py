"""Analyses over planar maps."""

from isobar.evaluators.connectivity import InconclusiveError, is_map, quasi_connectivity
from isobar.evaluators.grinberg import (
    certify_non_hamiltonian,
    check_certificate,
    enumerate_isobaric_partitions,
    verify_grinberg_identity,
)
from isobar.evaluators.hamilton import (
    enumerate_hamiltonian_cycles,
    find_hamiltonian_cycle,
    is_hamiltonian_cycle,
)
from isobar.evaluators.sides import NotACycleError, cycle_side_faces, dual_cut_of_cycle
from isobar.evaluators.three_h import find_3h_factorization, verify_corollary

__all__ = [
    "InconclusiveError",
    "NotACycleError",
    "certify_non_hamiltonian",
    "check_certificate",
    "cycle_side_faces",
    "dual_cut_of_cycle",
    "enumerate_hamiltonian_cycles",
    "enumerate_isobaric_partitions",
    "find_3h_factorization",
    "find_hamiltonian_cycle",
    "is_hamiltonian_cycle",
    "is_map",
    "quasi_connectivity",
    "verify_corollary",
    "verify_grinberg_identity",
]
