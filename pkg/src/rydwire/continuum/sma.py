"""Single-mode-approximation bound state of the infinite L shape.

With the first lead width normalized to one and r = zeta2/zeta1, the
bound-state wavenumber solves a transcendental matching condition between
the lowest transverse channels of the two leads.  The equation has steep
hyperbolic-cotangent terms, so the root is bracketed on a dense scan before
bisection.  No root is a valid outcome: far from the symmetric geometry the
bound state ceases to exist.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import brentq

from rydwire.errors import ConfigError

_SCAN_POINTS = 2000
_EDGE = 1e-6


def sma_mismatch(k2: float, r: float) -> float:
    """Left minus right side of the single-mode matching condition."""
    pi = np.pi
    a1 = np.sqrt(pi ** 2 - k2)               # decay rate of lead-1 channel
    a2 = np.sqrt((pi / r) ** 2 - k2)         # decay rate of lead-2 channel
    lhs = 4 * pi ** 4 / (
        r ** 3 * (pi ** 2 * (1 + r ** -2) - k2) ** 2 * a1 * a2)
    rhs = (1.0
           + 1.0 / (np.tanh(r * a1) * np.tanh(a2))
           + 1.0 / np.tanh(r * a1)
           + 1.0 / np.tanh(a2))
    return lhs - rhs


def sma_bound_state(r_zeta: float) -> float | None:
    """k^2 of the single-mode bound state, or None when no root exists."""
    if r_zeta <= 0:
        raise ConfigError("width ratio must be positive")
    k_th2 = min(np.pi, np.pi / r_zeta) ** 2
    grid = np.linspace(_EDGE, k_th2 - _EDGE, _SCAN_POINTS)
    vals = np.array([sma_mismatch(g, r_zeta) for g in grid])
    for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
        if np.isfinite(fa) and np.isfinite(fb) and fa * fb < 0:
            return float(brentq(sma_mismatch, a, b, args=(r_zeta,), xtol=1e-12))
    return None
