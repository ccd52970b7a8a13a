"""Tail-interaction mitigation by position or detuning optimization."""

from rydwire.mitigation.optimize import (
    MitigationReport,
    compute_spread,
    fidelity_vs_blockade_limit,
    optimize_detunings,
    optimize_positions,
)

__all__ = [
    "MitigationReport",
    "compute_spread",
    "optimize_positions",
    "optimize_detunings",
    "fidelity_vs_blockade_limit",
]
