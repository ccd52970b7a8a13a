"""Minimize the tail-induced diagonal spread by moving atoms or detunings."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import linprog

from rydwire.constants import MIN_ATOM_DISTANCE_UM, NEIGHBOR_SPACING, SECOND_NEIGHBOR_MIN
from rydwire.encoder.layout import Atom, AtomLayout, unit_disk_pairs
from rydwire.errors import ConfigError, NumericalError
from rydwire.exact.basis import enumerate_constrained_space
from rydwire.exact.hamiltonian import Controls, assemble_hamiltonian
from rydwire.exact.solve import ground_state
from rydwire.effective.tails import dw_diagonal_energies

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass
class MitigationReport:
    spread_before: float
    spread_after: float
    layout: AtomLayout
    detuning_offsets: dict[str, float] = field(default_factory=dict)
    fidelity: float | None = None
    violations: list[str] = field(default_factory=list)
    trace: list[tuple[int, float]] = field(default_factory=list)


def _controls(layout: AtomLayout, omega: float) -> Controls:
    return Controls(omega=omega, delta=layout.meta["delta"],
                    delta_g=layout.meta.get("delta_g"))


def compute_spread(layout: AtomLayout, omega: float,
                   tails: bool = True) -> float:
    """delta_eps = max - min of the wall-state diagonal energies."""
    _, energies = dw_diagonal_energies(layout, _controls(layout, omega),
                                       tails=tails)
    spread = float(energies.max() - energies.min())
    return 0.0 if spread < 1e-9 * layout.meta["delta"] else spread


def check_wire_constraints(layout: AtomLayout) -> list[str]:
    """Post-hoc verification of the three distance constraints."""
    rb = layout.rb_um
    out = []
    for wire in ("x", "y"):
        if f"n_{wire}" not in layout.meta or layout.meta[f"n_{wire}"] is None:
            continue
        n, m = layout.meta[f"n_{wire}"], layout.meta.get(f"m_{wire}")
        pos = layout.positions()[layout.wire_atoms(wire)]
        legs = [range(0, n)] if m is None else [range(0, m), range(m, n)]
        for leg in legs:
            leg = list(leg)
            for a, b in zip(leg[:-1], leg[1:]):
                d = float(np.hypot(*(pos[b] - pos[a])))
                if not MIN_ATOM_DISTANCE_UM <= d <= NEIGHBOR_SPACING * rb + 1e-9:
                    out.append(f"{wire}{a + 1}-{wire}{b + 1} neighbor distance {d:.3f}")
            for a, b in zip(leg[:-2], leg[2:]):
                d = float(np.hypot(*(pos[b] - pos[a])))
                if d < SECOND_NEIGHBOR_MIN * rb - 1e-9:
                    out.append(f"{wire}{a + 1}-{wire}{b + 1} second-neighbor distance {d:.3f}")
    return out


# -- position optimization ----------------------------------------------------

def _movable_atoms(layout: AtomLayout) -> list[int]:
    """Wire atoms other than the two pinned at the gadget cluster."""
    frozen = {f"x{layout.meta['m_x'] + 1}", f"y{layout.meta['m_y'] + 1}"}
    wire_roles = ("bulk", "boundary-initial", "boundary-final")
    return [i for i, a in enumerate(layout.atoms)
            if a.role in wire_roles and a.id not in frozen]


def _with_position(layout: AtomLayout, index: int, coord: float) -> AtomLayout | None:
    """Move one atom along its wire axis; None if the blockade graph changes."""
    a = layout.atoms[index]
    if a.wire == "x":
        moved = replace(a, x_um=coord)
    else:
        moved = replace(a, y_um=coord)
    atoms = list(layout.atoms)
    atoms[index] = moved
    pos = np.array([(at.x_um, at.y_um) for at in atoms])
    if unit_disk_pairs(pos, layout.rb_um) != set(layout.adjacency):
        return None
    return AtomLayout(atoms=atoms, c6=layout.c6, rb_um=layout.rb_um,
                      adjacency=layout.adjacency,
                      adjacency_mode=layout.adjacency_mode,
                      detuning_offsets=dict(layout.detuning_offsets),
                      meta=layout.meta)


def _axis_coord(atom: Atom) -> float:
    return atom.x_um if atom.wire == "x" else atom.y_um


def optimize_positions(layout: AtomLayout, omega: float,
                       n_restarts: int = 16, n_sweeps: int = 6,
                       seed: int = 5, jitter_um: float = 0.9) -> MitigationReport:
    """Coordinate-wise golden-section search over wire-atom positions.

    The gadget cluster stays frozen; every accepted move keeps the blockade
    graph and the wire distance constraints intact, so the spread never
    increases along the accepted sequence.
    """
    spread0 = compute_spread(layout, omega)
    if spread0 == 0.0:
        return MitigationReport(spread0, spread0, layout,
                                violations=check_wire_constraints(layout))
    movable = _movable_atoms(layout)
    rng = np.random.default_rng(seed)

    def objective(cand: AtomLayout | None) -> float:
        if cand is None or check_wire_constraints(cand):
            return np.inf
        return compute_spread(cand, omega)

    best_layout, best_val = layout, spread0
    trace = [(0, spread0)]
    step = 0
    for restart in range(n_restarts):
        cur = best_layout if restart == 0 else _jitter(best_layout, movable,
                                                       rng, jitter_um, objective)
        cur_val = objective(cur)
        for _ in range(n_sweeps):
            improved = False
            for idx in rng.permutation(movable):
                a = cur.atoms[idx]
                s0 = _axis_coord(a)
                lo, hi = s0 - jitter_um, s0 + jitter_um

                def f(s):
                    return objective(_with_position(cur, int(idx), float(s)))

                s_best, v_best = _golden(f, lo, hi, tol=0.01)
                if v_best < cur_val - 1e-12:
                    cur = _with_position(cur, int(idx), s_best)
                    cur_val = v_best
                    improved = True
                step += 1
            trace.append((step, cur_val))
            if not improved:
                break
        if cur_val < best_val:
            best_layout, best_val = cur, cur_val
    return MitigationReport(spread_before=spread0, spread_after=best_val,
                            layout=best_layout,
                            violations=check_wire_constraints(best_layout),
                            trace=trace)


def _jitter(layout, movable, rng, amount, objective) -> AtomLayout:
    cand = layout
    for idx in movable:
        s = _axis_coord(cand.atoms[idx]) + rng.uniform(-amount, amount)
        trial = _with_position(cand, idx, s)
        if trial is not None and objective(trial) < np.inf:
            cand = trial
    return cand


def _golden(f, a: float, b: float, tol: float) -> tuple[float, float]:
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


# -- detuning optimization ----------------------------------------------------

def optimize_detunings(layout: AtomLayout, omega: float,
                       max_offset_frac: float = 0.2) -> MitigationReport:
    """Minimize the spread over per-atom detuning offsets.

    The wall-state diagonals are affine in the offsets, so minimizing
    max - min is the linear program: min (hi - lo) subject to
    lo <= E0(j) + A(j) . eps <= hi, |eps_v| bounded well below Delta.
    """
    controls = _controls(layout, omega)
    from rydwire.encoder import dwspace

    sites, energies = dw_diagonal_energies(layout, controls, tails=True)
    _, masks = dwspace.dw_manifold(layout)
    marr = np.array(masks, dtype=np.uint64)
    n = layout.n_atoms
    occ = np.zeros((len(masks), n))
    for v in range(n):
        occ[:, v] = ((marr >> np.uint64(v)) & np.uint64(1)).astype(float)

    spread0 = float(energies.max() - energies.min())
    if spread0 < 1e-9 * layout.meta["delta"]:
        return MitigationReport(0.0, 0.0, layout)

    n_states = len(masks)
    # variables: eps (n), lo, hi ; objective hi - lo
    c = np.zeros(n + 2)
    c[n] = -1.0
    c[n + 1] = 1.0
    a_ub = np.zeros((2 * n_states, n + 2))
    b_ub = np.zeros(2 * n_states)
    a_ub[:n_states, :n] = occ
    a_ub[:n_states, n + 1] = -1.0
    b_ub[:n_states] = -energies
    a_ub[n_states:, :n] = -occ
    a_ub[n_states:, n] = 1.0
    b_ub[n_states:] = energies
    bound = max_offset_frac * layout.meta["delta"]
    bounds = [(-bound, bound)] * n + [(None, None), (None, None)]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if not res.success:
        raise NumericalError(f"detuning linear program failed: {res.message}")
    eps = res.x[:n]
    offsets = {layout.atoms[v].id: float(eps[v]) for v in range(n)
               if abs(eps[v]) > 1e-12}
    new_layout = AtomLayout(atoms=list(layout.atoms), c6=layout.c6,
                            rb_um=layout.rb_um, adjacency=layout.adjacency,
                            adjacency_mode=layout.adjacency_mode,
                            detuning_offsets=offsets, meta=layout.meta)
    spread1 = compute_spread(new_layout, omega)
    return MitigationReport(spread_before=spread0, spread_after=spread1,
                            layout=new_layout, detuning_offsets=offsets,
                            violations=check_wire_constraints(new_layout))


def fidelity_vs_blockade_limit(layout: AtomLayout, omega: float) -> float:
    """|<psi_blockade | psi_tails>|^2 for the exact ground states."""
    basis = enumerate_constrained_space(layout)
    controls = _controls(layout, omega)
    reference = AtomLayout(atoms=list(layout.atoms), c6=layout.c6,
                           rb_um=layout.rb_um, adjacency=layout.adjacency,
                           adjacency_mode=layout.adjacency_mode,
                           detuning_offsets={}, meta=layout.meta)
    _, psi_block = ground_state(assemble_hamiltonian(reference, controls,
                                                     basis=basis, tails=False))
    _, psi_tails = ground_state(assemble_hamiltonian(layout, controls,
                                                     basis=basis, tails=True))
    return float(abs(np.dot(psi_block, psi_tails)) ** 2)
