"""Time-dependent Schroedinger integration along a schedule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.integrate import solve_ivp

from rydwire.errors import NumericalError


@dataclass
class EvolutionResult:
    taus: np.ndarray
    states: np.ndarray            # (n_tau, dim) complex
    norm_drift: float

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    def fidelity_trace(self, target: np.ndarray) -> np.ndarray:
        return np.abs(self.states @ np.conj(target)) ** 2


def evolve_schedule(ham_at: Callable[[float], sp.spmatrix], psi0: np.ndarray,
                    duration: float, n_samples: int = 41,
                    rtol: float = 1e-10, atol: float = 1e-12,
                    max_norm_drift: float = 1e-8) -> EvolutionResult:
    """Adaptive explicit Runge-Kutta integration of i dpsi/dtau = H psi."""
    psi0 = np.asarray(psi0, dtype=complex)
    taus = np.linspace(0.0, duration, n_samples)

    def rhs(tau, psi):
        return -1j * ham_at(tau).dot(psi)

    sol = solve_ivp(rhs, (0.0, duration), psi0, method="DOP853",
                    t_eval=taus, rtol=rtol, atol=atol)
    if not sol.success:
        raise NumericalError(f"time integration failed: {sol.message}")
    states = sol.y.T
    norms = np.linalg.norm(states, axis=1)
    drift = float(np.max(np.abs(norms - 1.0)))
    if drift > max_norm_drift:
        raise NumericalError(f"norm drift {drift:.2e} above {max_norm_drift:.0e}")
    return EvolutionResult(taus=taus, states=states, norm_drift=drift)


def krylov_evolve(ham_at: Callable[[float], sp.spmatrix], psi0: np.ndarray,
                  duration: float, n_steps: int = 400,
                  n_samples: int = 41) -> EvolutionResult:
    """Midpoint-exponential stepping: psi -> exp(-i h H(t + h/2)) psi."""
    psi = np.asarray(psi0, dtype=complex).copy()
    h = duration / n_steps
    sample_taus = np.linspace(0.0, duration, n_samples)
    states = [psi.copy()]
    next_sample = 1
    for step in range(n_steps):
        tau_mid = (step + 0.5) * h
        psi = spla.expm_multiply(-1j * h * ham_at(tau_mid).tocsc(), psi)
        tau_end = (step + 1) * h
        while (next_sample < n_samples
               and sample_taus[next_sample] <= tau_end + 1e-12):
            states.append(psi.copy())
            next_sample += 1
    while len(states) < n_samples:
        states.append(psi.copy())
    states = np.array(states)
    norms = np.linalg.norm(states, axis=1)
    return EvolutionResult(taus=sample_taus, states=states,
                           norm_drift=float(np.max(np.abs(norms - 1.0))))


def instantaneous_overlaps(ham_at: Callable[[float], sp.spmatrix],
                           result: EvolutionResult, n_levels: int = 4
                           ) -> np.ndarray:
    """|<phi_n(tau)|psi(tau)>|^2 against the lowest instantaneous eigenstates."""
    out = np.zeros((result.taus.size, n_levels))
    for i, tau in enumerate(result.taus):
        h = ham_at(tau).toarray()
        _, vecs = np.linalg.eigh(h)
        ov = np.abs(vecs[:, :n_levels].T @ result.states[i]) ** 2
        out[i] = ov
    return out


def runtime_to_fidelity(fidelity_of: Callable[[float], float],
                        threshold: float = 0.9,
                        t_lo: float = 1.0, t_hi: float = 64.0,
                        t_cap: float = 1e5, rel_tol: float = 0.02) -> float:
    """Smallest duration reaching the target fidelity, by bisection.

    ``t_hi`` is grown geometrically until the threshold is met (up to the
    cap), then the crossing is bisected to relative tolerance.
    """
    if not 0.0 < threshold < 1.0:
        raise NumericalError("threshold must be in (0, 1)")
    while fidelity_of(t_hi) < threshold:
        t_lo = t_hi
        t_hi *= 2.0
        if t_hi > t_cap:
            raise NumericalError(f"threshold unreachable below the cap {t_cap}")
    while (t_hi - t_lo) > rel_tol * t_hi:
        mid = 0.5 * (t_lo + t_hi)
        if fidelity_of(mid) >= threshold:
            t_hi = mid
        else:
            t_lo = mid
    return t_hi
