"""Time-dependent control schedules.

Standard protocol: the bulk detuning sweeps from -Delta0 to +Delta0 while the
Rabi drive ramps up and back down; boundary detunings stay proportional to
Delta(tau) so the weight ratio (eps_f - eps_i)/Delta is constant.  Logical
protocol: Delta is held at +Delta0, the system starts in the all-0-logical
state under eps_i(0) > eps_f(0), both boundary detunings pass through zero at
half-protocol, and their final difference equals the wire weight.  Freeze:
standard ramp followed by an abrupt Rabi switch-off that pins populations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from rydwire.encoder.layout import AtomLayout
from rydwire.errors import ConfigError
from rydwire.exact.hamiltonian import Controls

RAMP_FRACTION = 0.15


@dataclass(frozen=True)
class PiecewiseCurve:
    """Piecewise-linear curve over normalized time tau/T in [0, 1]."""

    points: tuple[tuple[float, float], ...]

    def __call__(self, frac: float | np.ndarray) -> float | np.ndarray:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        out = np.interp(frac, xs, ys)
        return float(out) if np.isscalar(frac) else out


def _ramp(peak: float, ramp_frac: float) -> PiecewiseCurve:
    return PiecewiseCurve(((0.0, 0.0), (ramp_frac, peak),
                           (1.0 - ramp_frac, peak), (1.0, 0.0)))


@dataclass
class ControlSchedule:
    """Bundle of control curves over a protocol of duration T."""

    kind: str
    duration: float
    omega: PiecewiseCurve
    delta: PiecewiseCurve
    eps_i: dict[str, PiecewiseCurve] = field(default_factory=dict)
    eps_f: dict[str, PiecewiseCurve] = field(default_factory=dict)
    delta_g_ratio: float = 1.0
    eps_a: PiecewiseCurve | None = None
    eps_b: PiecewiseCurve | None = None
    balance_ancilla: bool = False
    rabi_factors: dict[str, float] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def frac(self, tau: float) -> float:
        if not 0.0 <= tau <= self.duration * (1 + 1e-12):
            raise ConfigError(f"tau = {tau} outside [0, T = {self.duration}]")
        return min(tau / self.duration, 1.0)

    def controls_at(self, tau: float) -> Controls:
        s = self.frac(tau)
        omega = self.omega(s)
        delta = self.delta(s)
        c = Controls(
            omega=omega,
            delta=delta,
            delta_g=self.delta_g_ratio * delta,
            eps_i={w: f(s) for w, f in self.eps_i.items()},
            eps_f={w: f(s) for w, f in self.eps_f.items()},
            rabi_factors=dict(self.rabi_factors),
        )
        if self.eps_a is not None:
            c.eps_a = self.eps_a(s)
        if self.eps_b is not None:
            c.eps_b = self.eps_b(s)
        if self.balance_ancilla:
            c.omega_a = c.omega_an = omega
            c.omega_b = omega ** 2 / delta if delta else 0.0
        return c

    def hopping_t(self, tau: float) -> float:
        """Effective hop t(tau) = Omega(tau)^2 / Delta(tau)."""
        s = self.frac(tau)
        d = self.delta(s)
        return self.omega(s) ** 2 / d if d else 0.0

    def lattice_eps_at(self, tau: float) -> dict[str, float]:
        """Boundary-group detunings for the effective lattices."""
        s = self.frac(tau)
        out = {}
        for w, f in self.eps_i.items():
            out[f"i_{w}"] = f(s)
        for w, f in self.eps_f.items():
            out[f"f_{w}"] = f(s)
        if self.eps_a is not None:
            out["A"] = self.eps_a(s)
        if self.eps_b is not None:
            out["B"] = self.eps_b(s)
        return out


def make_standard_schedule(omega0: float, delta0: float,
                           weights: dict[str, float], duration: float,
                           *, ramp_frac: float = RAMP_FRACTION,
                           delta_g_ratio: float = 1.0,
                           eps_ratios: dict[str, tuple[float, float]] | None = None,
                           ) -> ControlSchedule:
    """Standard protocol targeting the weights' MWIS solution.

    Boundary detunings follow eps = ratio * Delta(tau) with the centered
    split ratio_i = (1 - w/Delta0)/2, ratio_f = (1 + w/Delta0)/2, unless
    explicit ratios are given.
    """
    if omega0 <= 0 or delta0 <= 0:
        raise ConfigError("need positive Omega0 and Delta0")
    delta = PiecewiseCurve(((0.0, -delta0), (1.0, delta0)))
    eps_i, eps_f = {}, {}
    for w, weight in weights.items():
        if eps_ratios and w in eps_ratios:
            ri, rf = eps_ratios[w]
        else:
            ri, rf = (1 - weight / delta0) / 2, (1 + weight / delta0) / 2
        eps_i[w] = PiecewiseCurve(((0.0, -ri * delta0), (1.0, ri * delta0)))
        eps_f[w] = PiecewiseCurve(((0.0, -rf * delta0), (1.0, rf * delta0)))
    return ControlSchedule(kind="standard", duration=duration,
                           omega=_ramp(omega0, ramp_frac), delta=delta,
                           eps_i=eps_i, eps_f=eps_f,
                           delta_g_ratio=delta_g_ratio,
                           meta={"omega0": omega0, "delta0": delta0,
                                 "weights": dict(weights)})


def make_logical_schedule(omega0: float, delta0: float, duration: float,
                          eps_i0: dict[str, float], eps_iT: dict[str, float],
                          eps_fT: dict[str, float],
                          *, ramp_frac: float = RAMP_FRACTION,
                          delta_g_ratio: float = 1.0,
                          balance_at_half: bool = False,
                          balance_eps: dict[str, float] | None = None
                          ) -> ControlSchedule:
    """Logical protocol: constant Delta, boundary ramps through half-protocol.

    With ``balance_at_half`` the boundary and ancilla detunings pass through
    the hopping-detuning balance values (generically eps = t0 and
    eps_B = 2 t0) at tau = T/2 instead of zero; ``balance_eps`` overrides the
    midpoint per group for geometries where the generic values are not exact.
    """
    t0 = omega0 ** 2 / delta0
    balance_eps = balance_eps or {}

    def mid(group):
        if not balance_at_half:
            return 0.0
        return balance_eps.get(group, 2 * t0 if group == "B" else t0)

    eps_i, eps_f = {}, {}
    for w, v0 in eps_i0.items():
        if v0 <= 0.0:
            raise ConfigError("logical protocol needs eps_i(0) > eps_f(0) = 0")
        eps_i[w] = PiecewiseCurve(((0.0, v0), (0.5, mid(f"i_{w}")), (1.0, eps_iT[w])))
        eps_f[w] = PiecewiseCurve(((0.0, 0.0), (0.5, mid(f"f_{w}")), (1.0, eps_fT[w])))
    eps_a = eps_b = None
    if balance_at_half:
        eps_a = PiecewiseCurve(((0.0, 0.0), (0.5, mid("A")), (1.0, 0.0)))
        eps_b = PiecewiseCurve(((0.0, 0.0), (0.5, mid("B")), (1.0, 0.0)))
    return ControlSchedule(kind="logical", duration=duration,
                           omega=_ramp(omega0, ramp_frac),
                           delta=PiecewiseCurve(((0.0, delta0), (1.0, delta0))),
                           eps_i=eps_i, eps_f=eps_f,
                           delta_g_ratio=delta_g_ratio,
                           eps_a=eps_a, eps_b=eps_b,
                           balance_ancilla=balance_at_half,
                           meta={"omega0": omega0, "delta0": delta0, "t0": t0})


def make_freeze_schedule(omega0: float, delta0: float, duration: float,
                         weights: dict[str, float] | None = None,
                         *, ramp_frac: float = RAMP_FRACTION,
                         duration_cap: float = 4.0,
                         delta_g_ratio: float = 1.0) -> ControlSchedule:
    """Standard ramp ending in an abrupt Rabi switch-off.

    The bulk detuning reaches +Delta0 at half-protocol and stays there; Omega
    holds its plateau value until the final instant, freezing the
    finite-Omega ground state in the measurement basis.
    """
    if duration > duration_cap:
        raise ConfigError(f"freeze protocols are capped at {duration_cap} us")
    sched = make_standard_schedule(omega0, delta0, weights or {}, duration,
                                   ramp_frac=ramp_frac,
                                   delta_g_ratio=delta_g_ratio)
    omega = PiecewiseCurve(((0.0, 0.0), (ramp_frac, omega0),
                            (1.0 - 1e-9, omega0), (1.0, 0.0)))
    delta = PiecewiseCurve(((0.0, -delta0), (0.5, delta0), (1.0, delta0)))
    return replace(sched, kind="freeze", omega=omega, delta=delta)


def apply_boundary_rabi_control(schedule: ControlSchedule,
                                layout: AtomLayout) -> ControlSchedule:
    """Set boundary Rabi drives to track the boundary detunings.

    The ratio Omega_v / Omega is fixed to Delta_v / Delta for the initial and
    final atom of each wire.  Along the standard protocol both ratios are
    constant in time, so this is a static per-atom factor; with homogeneous
    boundary detunings it is a no-op.
    """
    if schedule.kind != "standard":
        raise ConfigError("boundary Rabi control tracks the standard protocol")
    delta0 = schedule.meta["delta0"]
    factors = dict(schedule.rabi_factors)
    for atom in layout.atoms:
        if atom.role == "boundary-initial":
            curve = schedule.eps_i.get(atom.wire)
        elif atom.role == "boundary-final":
            curve = schedule.eps_f.get(atom.wire)
        else:
            continue
        if curve is None:
            continue
        factors[atom.id] = 1.0 - curve(1.0) / delta0
    return replace(schedule, rabi_factors=factors)
