"""Blockade-limit Hamiltonian assembly in the constrained basis.

The projected Hamiltonian has diagonal -sum_v Delta_v n_v (plus van der Waals
tails over nonblockaded excited pairs when enabled) and off-diagonal entries
Omega_v between states related by one blockade-legal spin flip.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from rydwire.encoder.layout import AtomLayout
from rydwire.errors import ConfigError
from rydwire.exact.basis import ConstrainedBasis


@dataclass
class Controls:
    """Instantaneous drive values bound to atoms through their roles."""

    omega: float
    delta: float
    delta_g: float | None = None
    eps_i: dict[str, float] = field(default_factory=dict)
    eps_f: dict[str, float] = field(default_factory=dict)
    eps_a: float = 0.0
    eps_b: float = 0.0
    omega_a: float = 0.0
    omega_an: float = 0.0
    omega_b: float = 0.0
    rabi_factors: dict[str, float] = field(default_factory=dict)

    def atom_delta(self, layout: AtomLayout, i: int) -> float:
        a = layout.atoms[i]
        dg = self.delta_g if self.delta_g is not None else self.delta
        if a.role == "bulk":
            base = self.delta
        elif a.role == "boundary-initial":
            base = self.delta - self.eps_i.get(a.wire, 0.0)
        elif a.role == "boundary-final":
            base = self.delta - self.eps_f.get(a.wire, 0.0)
        elif a.role in ("crossing-gadget", "gadget-Gx", "gadget-Gy", "gadget-Gc"):
            base = dg
        elif a.role == "ancilla-A":
            base = self.delta + self.eps_a
        elif a.role == "ancilla-AN":
            base = self.delta
        elif a.role == "ancilla-B":
            base = self.eps_b
        else:  # pragma: no cover
            raise ConfigError(f"unbound role {a.role!r}")
        return base - layout.detuning_offsets.get(a.id, 0.0)

    def atom_omega(self, layout: AtomLayout, i: int) -> float:
        a = layout.atoms[i]
        if a.role == "ancilla-A":
            return self.omega_a
        if a.role == "ancilla-AN":
            return self.omega_an
        if a.role == "ancilla-B":
            return self.omega_b
        return self.omega * self.rabi_factors.get(a.id, 1.0)


@dataclass
class SparseHamiltonian:
    """Real symmetric Hamiltonian split into diagonal and flip parts."""

    basis: ConstrainedBasis
    diagonal: np.ndarray
    offdiag: sp.csr_matrix

    @property
    def dim(self) -> int:
        return self.basis.dim

    def matrix(self) -> sp.csr_matrix:
        return (self.offdiag + sp.diags(self.diagonal)).tocsr()

    def dense(self) -> np.ndarray:
        return self.matrix().toarray()

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.offdiag.dot(v) + self.diagonal * v


def tail_pairs(layout: AtomLayout, cutoff: float) -> list[tuple[int, int, float]]:
    """Nonblockaded pairs with interaction C6/d^6 at least ``cutoff``."""
    pos = layout.positions()
    blocked = set(layout.adjacency)
    out = []
    n = layout.n_atoms
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in blocked:
                continue
            d = float(np.hypot(*(pos[j] - pos[i])))
            u = layout.c6 / d ** 6
            if u >= cutoff:
                out.append((i, j, u))
    return out


def assemble_hamiltonian(layout: AtomLayout, controls: Controls,
                         basis: ConstrainedBasis | None = None,
                         tails: bool = False,
                         tail_cutoff: float | None = None) -> SparseHamiltonian:
    """Assemble the projected Hamiltonian at one instant of the controls."""
    from rydwire.exact.basis import enumerate_constrained_space

    if basis is None:
        basis = enumerate_constrained_space(layout)
    if basis.n_atoms != layout.n_atoms:
        raise ConfigError("basis atom count does not match the layout")
    states = basis.states
    dim = basis.dim

    diag = np.zeros(dim)
    for i in range(layout.n_atoms):
        dv = controls.atom_delta(layout, i)
        if dv != 0.0:
            diag -= dv * basis.occupation(i)
    if tails:
        if tail_cutoff is None:
            scale = abs(controls.omega) if controls.omega else 1.0
            tail_cutoff = 1e-4 * scale
        for i, j, u in tail_pairs(layout, tail_cutoff):
            diag += u * basis.occupation(i) * basis.occupation(j)

    rows, cols, vals = [], [], []
    for i in range(layout.n_atoms):
        ov = controls.atom_omega(layout, i)
        if ov == 0.0:
            continue
        bit = np.uint64(1 << i)
        nb = np.uint64(basis.neighbor_masks[i])
        # up-flips from states with atom i ground and all its partners ground
        can = ((states & bit) == 0) & ((states & nb) == 0)
        src = np.nonzero(can)[0]
        partners = states[src] | bit
        dst = np.searchsorted(states, partners)
        rows.append(src)
        cols.append(dst)
        vals.append(np.full(src.size, ov))
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        v = np.concatenate(vals)
        upper = sp.coo_matrix((v, (r, c)), shape=(dim, dim))
        offdiag = (upper + upper.T).tocsr()
    else:
        offdiag = sp.csr_matrix((dim, dim))
    return SparseHamiltonian(basis=basis, diagonal=diag, offdiag=offdiag)
