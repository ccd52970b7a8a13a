"""Analytic eigenmodes of the one-dimensional wall-hopping problem.

The boundary detunings act as conditions psi(0) = r_i psi(1) and
psi(L+1) = r_f psi(L) on two virtual sites of a pure hopping chain.  Allowed
wavenumbers solve

    sin(k(L+1)) - (r_i + r_f) sin(kL) + r_i r_f sin(k(L-1)) = 0,

with E_k = -2 t cos k.  For r > 1 one root moves to imaginary k = i*kappa
(kappa -> log r for large L), a mode bound to the corresponding edge.  At
r_i = r_f the characteristic factors into parity sectors, which is required
numerically because its roots then pair up too closely for sign scans.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from rydwire.errors import ConfigError, NumericalError


@dataclass
class Mode1D:
    k: complex            # real for band modes, i*kappa for bound modes
    energy: float         # in units of t
    psi: np.ndarray       # profile on j = 1..L, max-normalized

    @property
    def bound(self) -> bool:
        return abs(complex(self.k).imag) > 0


def _profile(k: complex, length: int, ri: float) -> np.ndarray:
    j = np.arange(1, length + 1)
    num = 1.0 - ri * np.exp(1j * k)
    den = 1.0 - ri * np.exp(-1j * k)
    z = num / den if den != 0 else 0.0
    psi = np.exp(1j * k * j) - z * np.exp(-1j * k * j)
    pivot = psi[np.argmax(np.abs(psi))]
    psi = (psi * np.exp(-1j * np.angle(pivot))).real
    return psi / np.max(np.abs(psi))


def mode_residual(mode: Mode1D, ri: float, rf: float) -> float:
    """Max violation of the hopping relation including the virtual sites."""
    psi = mode.psi
    ext = np.concatenate(([ri * psi[0]], psi, [rf * psi[-1]]))
    lhs = -(ext[:-2] + ext[2:])
    return float(np.max(np.abs(lhs - mode.energy * psi)))


def _scan_roots(fn, grid) -> list[float]:
    vals = np.array([fn(g) for g in grid])
    roots = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
        if fa == 0.0:
            roots.append(float(a))
        elif fa * fb < 0:
            roots.append(brentq(fn, a, b, xtol=1e-13))
    return roots


def analytic_1d_modes(length: int, ri: float, rf: float,
                      residual_tol: float = 1e-10) -> list[Mode1D]:
    """All L eigenmodes: band roots on (0, pi) plus edge-bound roots."""
    if length < 2 or ri < 0 or rf < 0:
        raise ConfigError("need length >= 2 and r_i, r_f >= 0")
    band_roots: list[float] = []
    bound_roots: list[float] = []

    if ri == rf:
        r = ri
        a, b = 0.5 * (length + 1), 0.5 * (length - 1)

        def g_even(k):
            return np.cos(k * a) - r * np.cos(k * b)

        def g_odd(k):
            return np.sin(k * a) - r * np.sin(k * b)

        grid = np.linspace(0.0, np.pi, 8 * length + 1)[1:-1]
        band_roots = _scan_roots(g_even, grid) + _scan_roots(g_odd, grid)
        if r == 1.0:
            band_roots.append(0.0)  # uniform mode of the even sector
        if r > 1.0:
            def gb_even(kp):
                return (1 + np.exp(-2 * kp * a)) - r * (
                    np.exp(-kp) + np.exp(-kp * (2 * b + 1)))

            def gb_odd(kp):
                return (1 - np.exp(-2 * kp * a)) - r * (
                    np.exp(-kp) - np.exp(-kp * (2 * b + 1)))

            kgrid = np.linspace(1e-12, np.log(r) + 3.0, 2001)
            bound_roots = _scan_roots(gb_even, kgrid) + _scan_roots(gb_odd, kgrid)
    else:
        def f_band(k):
            return (np.sin(k * (length + 1)) - (ri + rf) * np.sin(k * length)
                    + ri * rf * np.sin(k * (length - 1)))

        def f_bound(kp):
            e = np.exp
            return ((1.0 - e(-2 * kp * (length + 1)))
                    - (ri + rf) * (e(-kp) - e(-kp * (2 * length + 1)))
                    + ri * rf * (e(-2 * kp) - e(-2 * kp * length)))

        grid = np.linspace(0.0, np.pi, 8 * length + 1)[1:-1]
        band_roots = _scan_roots(f_band, grid)
        if max(ri, rf) > 1.0:
            kgrid = np.linspace(1e-12, np.log(max(ri, rf)) + 3.0, 4001)
            bound_roots = _scan_roots(f_bound, kgrid)

    modes = [Mode1D(k=k, energy=-2.0 * np.cos(k), psi=_profile(k, length, ri))
             for k in band_roots]
    modes += [Mode1D(k=1j * kp, energy=-2.0 * np.cosh(kp),
                     psi=_profile(1j * kp, length, ri))
              for kp in bound_roots]
    modes.sort(key=lambda m: m.energy)
    if len(modes) != length:
        raise NumericalError(
            f"found {len(modes)} modes for L = {length}, r = ({ri}, {rf}); "
            "root bracketing failed")
    worst = max(mode_residual(m, ri, rf) for m in modes)
    if worst > residual_tol:
        raise NumericalError(f"mode residual {worst:.2e} above {residual_tol}")
    return modes


def large_l_wavenumber(m: int, length: int, ri: float, rf: float) -> float:
    """Closed-form k_m to order 1/L^2 valid away from r_i r_f = 1."""
    x = m * np.pi / length
    den = (ri + rf) - (ri * rf + 1.0) * np.cos(x)
    if den == 0.0:
        raise ConfigError("expansion undefined where (ri+rf) = (ri rf+1) cos(m pi/L)")
    return x + (1.0 - ri * rf) * np.sin(x) / (length * den)
