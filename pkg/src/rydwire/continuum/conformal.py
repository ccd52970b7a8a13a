"""Conformal maps between bent L-shaped domains and the unit disk.

The disk coordinate z goes to the upper half plane via the Moebius map
u = -i(z-1)/(z+1); a Schwarz-Christoffel integral then carries u to the
domain coordinate w.  For the right-angle shape (p = 1/2) the integral has a
closed form; general bends use adaptive Gauss-Legendre quadrature after the
substitution v = u^(1-p) that absorbs the endpoint power singularity.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial.legendre import leggauss

from rydwire.errors import ConfigError, NumericalError


def mobius_to_halfplane(z: complex) -> complex:
    return -1j * (z - 1.0) / (z + 1.0)


def mobius_to_disk(u: complex) -> complex:
    return (1.0 + 1j * u) / (1.0 - 1j * u)


def _sc_prefactor(zeta1: float) -> float:
    return -(zeta1 ** 2 + zeta1 ** -2) / np.pi


def _sc_integrand(u: complex, p: float, zeta1: float) -> complex:
    return 1.0 / ((u / zeta1 ** 2 - 1.0) * u ** p * (zeta1 ** 2 * u + 1.0))


def _w_closed_half(u: complex, zeta1: float) -> complex:
    su = np.sqrt(complex(u))
    return (2.0 / np.pi) * (zeta1 * np.arctan(zeta1 * su)
                            + np.arctanh(su / zeta1) / zeta1)


def strip_closed_form(w: complex) -> complex:
    """p = 0 limit (infinite strip): the disk point of a strip point w."""
    c = np.cos(np.pi * w)
    return (1j + c) / (1.0 + 1j * c)


def _w_quadrature(u: complex, p: float, zeta1: float,
                  tol: float = 1e-11) -> complex:
    """Schwarz-Christoffel integral by substitution v = u^(1-p)."""
    q = 1.0 - p
    v_end = complex(u) ** q
    val_prev = None
    for m in (64, 128, 256, 512, 1024):
        nodes, weights = leggauss(m)
        v = 0.5 * v_end * (nodes + 1.0)
        uu = v ** (1.0 / q)
        f = _sc_integrand(uu, 0.0, zeta1) / q  # power absorbed by substitution
        val = 0.5 * v_end * np.sum(weights * f)
        if val_prev is not None and abs(val - val_prev) < tol:
            return _sc_prefactor(zeta1) * val
        val_prev = val
    raise NumericalError("Schwarz-Christoffel quadrature did not settle")


def disk_to_lshape(z: complex, p: float = 0.5, zeta1: float = 1.0) -> complex:
    """Map a disk point to the (bent) L-shaped domain."""
    if abs(z) >= 1.0 + 1e-12:
        raise ConfigError("point must lie inside the unit disk")
    u = mobius_to_halfplane(z)
    if abs(u) < 1e-300:
        return 0.0 + 0.0j
    if p == 0.5:
        return _w_closed_half(u, zeta1)
    return _w_quadrature(u, p, zeta1)


def _dw_dz(z: complex, p: float, zeta1: float) -> complex:
    u = mobius_to_halfplane(z)
    du_dz = -2j / (z + 1.0) ** 2
    return _sc_prefactor(zeta1) * _sc_integrand(u, p, zeta1) * du_dz


def lshape_to_disk(w: complex, p: float = 0.5, zeta1: float = 1.0,
                   tol: float = 1e-11, max_iter: int = 200) -> complex:
    """Invert the map by damped Newton iteration on the disk."""
    seeds = [0.0 + 0.0j, 0.3 + 0.3j, -0.3 + 0.3j, 0.3 - 0.3j, -0.3 - 0.3j,
             0.6 + 0.1j, 0.1 + 0.6j, -0.1 - 0.6j]
    for z in seeds:
        z = complex(z)
        ok = True
        for _ in range(max_iter):
            try:
                f = disk_to_lshape(z, p, zeta1) - w
            except (ConfigError, FloatingPointError):
                ok = False
                break
            if abs(f) < tol:
                return z
            step = f / _dw_dz(z, p, zeta1)
            damp = 1.0
            z_new = z - step
            while abs(z_new) >= 0.999999:
                damp /= 2.0
                if damp < 1e-8:
                    break
                z_new = z - damp * step
            if abs(z_new) >= 0.999999:
                ok = False
                break
            z = z_new
        if ok and abs(disk_to_lshape(z, p, zeta1) - w) < 10 * tol:
            return z
    raise NumericalError(f"inverse map failed for w = {w}")


def jacobian_chi(x: np.ndarray, y: np.ndarray, p: float = 0.5,
                 zeta1: float = 1.0) -> np.ndarray:
    """|dw/dz|^2 on the disk, with the lead infinities as boundary poles."""
    phi = 2.0 * np.arctan(1.0 / zeta1 ** 2)
    num = ((x + 1.0) ** 2 + y ** 2) / ((x - 1.0) ** 2 + y ** 2)
    d1 = (x - np.cos(phi)) ** 2 + (y + np.sin(phi)) ** 2
    d2 = (x + np.cos(phi)) ** 2 + (y - np.sin(phi)) ** 2
    return (4.0 / np.pi ** 2) * num ** p / (d1 * d2)
