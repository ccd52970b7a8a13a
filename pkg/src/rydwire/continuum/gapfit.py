"""Bound-state gap laws fitted against lead length."""

from __future__ import annotations

import numpy as np
from scipy.optimize import minimize_scalar

from rydwire.errors import ConfigError, NumericalError


def fit_gap_model(lengths, gaps) -> tuple[float, float]:
    """Least squares for gap = D / L^2 + d; returns (D, d)."""
    lengths = np.asarray(lengths, dtype=float)
    gaps = np.asarray(gaps, dtype=float)
    if lengths.size < 4:
        raise ConfigError("need at least 4 lead lengths")
    a = np.column_stack([lengths ** -2, np.ones_like(lengths)])
    coef, residues, rank, _ = np.linalg.lstsq(a, gaps, rcond=None)
    if rank < 2:
        raise NumericalError("gap-model fit is rank deficient")
    return float(coef[0]), float(coef[1])


def fit_lattice_gap_model(lengths, gaps, zeta: float,
                          z_bounds=(0.5, 6.0)) -> tuple[float, float, float]:
    """Least squares for gap = g / zeta^2 + G / L^z; returns (g, G, z)."""
    lengths = np.asarray(lengths, dtype=float)
    gaps = np.asarray(gaps, dtype=float)
    if lengths.size < 4:
        raise ConfigError("need at least 4 lead lengths")

    def sq_residual(z):
        a = np.column_stack([np.full_like(lengths, zeta ** -2), lengths ** -z])
        coef, *_ = np.linalg.lstsq(a, gaps, rcond=None)
        return float(np.sum((a @ coef - gaps) ** 2))

    res = minimize_scalar(sq_residual, bounds=z_bounds, method="bounded",
                          options={"xatol": 1e-8})
    z = float(res.x)
    a = np.column_stack([np.full_like(lengths, zeta ** -2), lengths ** -z])
    coef, *_ = np.linalg.lstsq(a, gaps, rcond=None)
    return float(coef[0]), float(coef[1]), z
