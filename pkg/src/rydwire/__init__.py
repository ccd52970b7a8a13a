"""Rydberg vertex-wire toolkit.

Builds unit-disk atom layouts that encode maximum weighted independent set
(MWIS) instances on crossing vertex wires, diagonalizes the blockade-limit
(optionally tailed) Rydberg Hamiltonian exactly at desk scale, constructs and
solves the perturbative domain-wall hopping models, sweeps adiabatic
protocols for minimum-gap scaling, solves the equivalent continuum bound-state
problem on L-shaped domains, and postprocesses measured bitstrings into MWIS
answers.
"""

from rydwire.errors import ConfigError, NumericalError, ResourceGuardError

__version__ = "0.1.0"

__all__ = ["ConfigError", "NumericalError", "ResourceGuardError", "__version__"]
