"""Perturbative domain-wall hopping models and their solutions."""

from rydwire.effective.lattice import (
    DomainWallLattice,
    apply_balance_condition,
    build_dw_1d,
    build_dw_ancilla,
    build_dw_crossing,
    build_dw_cwe,
    build_lshape,
    solve_lattice,
)
from rydwire.effective.modes1d import Mode1D, analytic_1d_modes, large_l_wavenumber
from rydwire.effective.tails import dw_diagonal_energies, tail_diagonals
from rydwire.effective.crossing_model import (
    crossing_small_gadget_model,
    single_wire_gadget_model,
)

__all__ = [
    "DomainWallLattice",
    "build_dw_1d",
    "build_dw_crossing",
    "build_dw_cwe",
    "build_dw_ancilla",
    "build_lshape",
    "apply_balance_condition",
    "solve_lattice",
    "Mode1D",
    "analytic_1d_modes",
    "large_l_wavenumber",
    "tail_diagonals",
    "dw_diagonal_energies",
    "crossing_small_gadget_model",
    "single_wire_gadget_model",
]
