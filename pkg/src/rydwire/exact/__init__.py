"""Exact blockade-limit (optionally tailed) spectra and observables."""

from rydwire.exact.basis import ConstrainedBasis, enumerate_constrained_space
from rydwire.exact.hamiltonian import Controls, SparseHamiltonian, assemble_hamiltonian, tail_pairs
from rydwire.exact.solve import SpectrumResult, ground_state, lowest_eigenpairs
from rydwire.exact.observables import (
    ChiValue,
    bipartite_entropy,
    correlation_map,
    correlation_from_samples,
    fidelity_susceptibility,
    gadget_density,
    sample_bitstrings,
)

__all__ = [
    "ConstrainedBasis",
    "enumerate_constrained_space",
    "Controls",
    "SparseHamiltonian",
    "assemble_hamiltonian",
    "tail_pairs",
    "SpectrumResult",
    "lowest_eigenpairs",
    "ground_state",
    "ChiValue",
    "fidelity_susceptibility",
    "gadget_density",
    "bipartite_entropy",
    "correlation_map",
    "correlation_from_samples",
    "sample_bitstrings",
]
