"""Adiabatic protocol schedules, gap sweeps, scaling fits, time evolution."""

from rydwire.protocol.schedule import (
    ControlSchedule,
    PiecewiseCurve,
    apply_boundary_rabi_control,
    make_freeze_schedule,
    make_logical_schedule,
    make_standard_schedule,
)
from rydwire.protocol.sweep import SpectrumSweep, gap_sweep, exact_spectrum_fn, lattice_spectrum_fn
from rydwire.protocol.scaling import ScalingFit, fit_fss_collapse, fit_gap_scaling, fss_gap_ansatz
from rydwire.protocol.evolve import (
    evolve_schedule,
    instantaneous_overlaps,
    krylov_evolve,
    runtime_to_fidelity,
)

__all__ = [
    "ControlSchedule",
    "PiecewiseCurve",
    "make_standard_schedule",
    "make_logical_schedule",
    "make_freeze_schedule",
    "apply_boundary_rabi_control",
    "SpectrumSweep",
    "gap_sweep",
    "exact_spectrum_fn",
    "lattice_spectrum_fn",
    "ScalingFit",
    "fit_gap_scaling",
    "fit_fss_collapse",
    "fss_gap_ansatz",
    "evolve_schedule",
    "krylov_evolve",
    "instantaneous_overlaps",
    "runtime_to_fidelity",
]
