"""Core data models for isobar."""

from isobar.models.certificate import Certificate, IsobaricPartition, WeightSummary
from isobar.models.construction import BichromaticPart, ConstructionParams, FVector, LayerState
from isobar.models.cycle import HamiltonianCycle
from isobar.models.planar_map import DualCut, Face, InvalidMapError, PlanarMap
from isobar.models.structure import EdgeCut, QuasiConnectivity, ThreeHFactorization

__all__ = [
    "BichromaticPart",
    "Certificate",
    "ConstructionParams",
    "DualCut",
    "EdgeCut",
    "FVector",
    "Face",
    "HamiltonianCycle",
    "InvalidMapError",
    "IsobaricPartition",
    "LayerState",
    "PlanarMap",
    "QuasiConnectivity",
    "ThreeHFactorization",
    "WeightSummary",
]
