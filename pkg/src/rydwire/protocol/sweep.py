"""Instantaneous spectra along a protocol and the minimum gap."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from rydwire.effective.lattice import DomainWallLattice, solve_lattice
from rydwire.encoder.layout import AtomLayout
from rydwire.exact.basis import ConstrainedBasis, enumerate_constrained_space
from rydwire.exact.hamiltonian import assemble_hamiltonian
from rydwire.exact.solve import lowest_eigenpairs
from rydwire.protocol.schedule import ControlSchedule

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass
class SpectrumSweep:
    taus: np.ndarray
    energies: np.ndarray          # (n_tau, k), ascending per row
    min_gap: float
    tau_star: float
    engine: str
    degenerate_final: bool = False

    def gaps(self) -> np.ndarray:
        return self.energies[:, 1] - self.energies[:, 0]


def exact_spectrum_fn(layout: AtomLayout, schedule: ControlSchedule,
                      k: int = 2, tails: bool = False,
                      basis: ConstrainedBasis | None = None) -> Callable:
    if basis is None:
        basis = enumerate_constrained_space(layout)

    def spectrum(tau: float) -> np.ndarray:
        h = assemble_hamiltonian(layout, schedule.controls_at(tau),
                                 basis=basis, tails=tails)
        return lowest_eigenpairs(h, k=k).eigenvalues

    return spectrum


def lattice_spectrum_fn(lattice: DomainWallLattice, schedule: ControlSchedule,
                        k: int = 2,
                        extra_diag: np.ndarray | None = None) -> Callable:
    """Spectrum of the effective lattice driven by the schedule.

    The lattice must be built with unit hop amplitude (and tp equal to the
    hop ratio t'/t); the schedule scales every link by t(tau) and redials the
    boundary-group detunings.
    """

    def spectrum(tau: float) -> np.ndarray:
        res = solve_lattice(lattice, k=k,
                            group_eps=schedule.lattice_eps_at(tau),
                            extra_diag=extra_diag,
                            t_scale=schedule.hopping_t(tau))
        return res.eigenvalues

    return spectrum


def _golden_min(fn, a: float, b: float, tol: float) -> tuple[float, float]:
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = fn(x1), fn(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = fn(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def gap_sweep(spectrum_at: Callable[[float], np.ndarray], duration: float,
              n_coarse: int = 200, refine_tol_frac: float = 1e-9,
              engine: str = "effective",
              degeneracy_tol: float = 1e-12) -> SpectrumSweep:
    """Sweep the low spectrum over the protocol and refine the minimum gap.

    A coarse grid locates the basin of the smallest E1 - E0; golden-section
    search then pins the minimizer to ``refine_tol_frac`` of the duration, so
    narrow avoided crossings resolved by the coarse grid are followed to
    their bottom.
    """
    taus = np.linspace(0.0, duration, n_coarse)
    energies = np.array([spectrum_at(t) for t in taus])
    gaps = energies[:, 1] - energies[:, 0]

    def gap(tau):
        e = spectrum_at(tau)
        return e[1] - e[0]

    # Narrow avoided crossings appear as isolated dips whose refined bottom
    # can undercut the broad global minimum, so the deepest local basins are
    # all refined, not just the global coarse minimum.
    basins = [i for i in range(n_coarse)
              if (i == 0 or gaps[i] <= gaps[i - 1])
              and (i == n_coarse - 1 or gaps[i] <= gaps[i + 1])]
    i0 = int(np.argmin(gaps))
    basins = [i for i in basins if gaps[i] <= 50.0 * gaps[i0]]
    basins = sorted(basins, key=lambda i: gaps[i])[:8]
    tau_star, g_star = float(taus[i0]), float(gaps[i0])
    for i in basins:
        a = taus[max(i - 1, 0)]
        b = taus[min(i + 1, n_coarse - 1)]
        t_ref, g_ref = _golden_min(gap, a, b, refine_tol_frac * duration)
        if g_ref < g_star:
            tau_star, g_star = float(t_ref), float(g_ref)
    final_gap = float(gaps[-1])
    return SpectrumSweep(taus=taus, energies=energies,
                         min_gap=float(g_star), tau_star=float(tau_star),
                         engine=engine,
                         degenerate_final=final_gap < degeneracy_tol)
