"""Isobar - planar maps, Grinberg weights and non-Hamiltonicity certificates.

Tools for embedded planar graphs given as rotation systems: face extraction,
duals, the Grinberg face-weight identity, isobaric partitions, checkable
certificates that a map has no Hamiltonian cycle, and a generator for an
unbounded family of cubic maps without one.
"""

__version__ = "0.1.0"
__author__ = "Isobar Contributors"
__description__ = "Grinberg-criterion toolkit for planar maps"
