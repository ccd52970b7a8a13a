"""Homotopy-perturbation iteration for the mapped disk eigenproblem.

The bound state of the bent L shape solves -laplace phi = k^2 chi_p phi on
the unit disk.  Starting from the disk ground mode (Bessel J0 profile), each
step solves a Poisson problem through the disk Green function and updates the
energy by the Rayleigh functional E[phi] = -int phi laplace phi / int chi_p
phi^2, which decreases monotonically once the iteration settles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import j0, j1, jn_zeros

from rydwire.continuum.conformal import jacobian_chi
from rydwire.errors import ConfigError


@dataclass
class DiskMesh:
    x: np.ndarray
    y: np.ndarray
    weights: np.ndarray           # midpoint-rule cell areas

    @property
    def n_points(self) -> int:
        return self.x.size


def disk_mesh(n_r: int = 80, n_theta: int = 160, grading: float = 2.0) -> DiskMesh:
    """Polar midpoint grid with radii graded toward the boundary poles."""
    s_edges = np.linspace(0.0, 1.0, n_r + 1)
    r_edges = 1.0 - (1.0 - s_edges) ** grading
    r_mid = 0.5 * (r_edges[:-1] + r_edges[1:])
    dr = np.diff(r_edges)
    th_edges = np.linspace(0.0, 2.0 * np.pi, n_theta + 1)
    th_mid = 0.5 * (th_edges[:-1] + th_edges[1:])
    dth = np.diff(th_edges)
    rr, tt = np.meshgrid(r_mid, th_mid, indexing="ij")
    ww = np.outer(r_mid * dr, dth)
    return DiskMesh(x=(rr * np.cos(tt)).ravel(), y=(rr * np.sin(tt)).ravel(),
                    weights=ww.ravel())


def _green_apply(mesh: DiskMesh, source: np.ndarray,
                 block: int = 2000) -> np.ndarray:
    """phi(x) = int G(x; x0) source(x0) dx0 with the Dirichlet disk kernel."""
    x, y, w = mesh.x, mesh.y, mesh.weights
    sw = source * w
    r2 = x ** 2 + y ** 2
    out = np.empty(mesh.n_points)
    eq_radius = np.sqrt(w / np.pi)
    for start in range(0, mesh.n_points, block):
        sl = slice(start, min(start + block, mesh.n_points))
        dx = x[sl, None] - x[None, :]
        dy = y[sl, None] - y[None, :]
        a = dx ** 2 + dy ** 2
        b = (r2[sl, None] * r2[None, :]
             - 2.0 * (x[sl, None] * x[None, :] + y[sl, None] * y[None, :]) + 1.0)
        g = np.log(b / np.where(a > 0, a, 1.0)) / (4.0 * np.pi)
        # self cell: average of ln(1/rho)/(2 pi) over an equal-area circle
        idx = np.arange(sl.start, sl.stop)
        g[idx - sl.start, idx] = (np.log(b[idx - sl.start, idx]) / (4.0 * np.pi)
                                  + (np.log(1.0 / eq_radius[idx]) + 0.5)
                                  / (2.0 * np.pi))
        out[sl] = g @ sw
    return out


def hpm_iterate(p: float = 0.5, zeta1: float = 1.0, n_iterations: int = 13,
                mesh: DiskMesh | None = None
                ) -> tuple[list[float], np.ndarray, DiskMesh]:
    """Energy sequence k^2_n and the final profile on the disk mesh.

    The n = 0 energy is the disk eigenvalue beta^2 (beta the first zero of
    J0); subsequent energies are Rayleigh values of the iterated profiles.
    """
    if n_iterations < 1:
        raise ConfigError("need at least one iteration")
    if mesh is None:
        mesh = disk_mesh()
    chi = jacobian_chi(mesh.x, mesh.y, p=p, zeta1=zeta1)
    beta = float(jn_zeros(0, 1)[0])
    rho = np.sqrt(mesh.x ** 2 + mesh.y ** 2)
    phi = j0(beta * rho) / (np.sqrt(np.pi) * j1(beta))
    energies = [beta ** 2]
    for _ in range(n_iterations):
        k2_prev = energies[-1]
        source = k2_prev * chi * phi
        phi_new = _green_apply(mesh, source)
        num = k2_prev * float(np.sum(phi_new * chi * phi * mesh.weights))
        den = float(np.sum(chi * phi_new ** 2 * mesh.weights))
        energies.append(num / den)
        phi = phi_new / np.max(np.abs(phi_new))
    return energies, phi, mesh
