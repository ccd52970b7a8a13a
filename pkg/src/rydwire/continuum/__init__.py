"""Continuum Helmholtz problem on (bent) L-shaped domains."""

from rydwire.continuum.domain import ContinuumSpectrum, LShapeDomain
from rydwire.continuum.fem import fem_ground_extrapolated, helmholtz_fem
from rydwire.continuum.sma import sma_bound_state, sma_mismatch
from rydwire.continuum.conformal import (
    disk_to_lshape,
    jacobian_chi,
    lshape_to_disk,
    strip_closed_form,
)
from rydwire.continuum.hpm import hpm_iterate
from rydwire.continuum.gapfit import fit_gap_model, fit_lattice_gap_model

__all__ = [
    "LShapeDomain",
    "ContinuumSpectrum",
    "helmholtz_fem",
    "fem_ground_extrapolated",
    "sma_bound_state",
    "sma_mismatch",
    "disk_to_lshape",
    "lshape_to_disk",
    "jacobian_chi",
    "strip_closed_form",
    "hpm_iterate",
    "fit_gap_model",
    "fit_lattice_gap_model",
]
