"""Crossing-setup effective model valid for small gadget detunings.

For |Delta_g| << Delta the empty-gadget states are resonant with the wall
lattice, so they enter explicitly instead of perturbatively: the model spans
(i) the wall-lattice states (one gadget excitation, first-order diagonal
-Delta_g, wire hops t, no through-gadget hops) and (ii) the empty-gadget
states where every leg carries its own wall (pure leg hopping t), coupled by
single gadget flips of amplitude Omega.  Ground energies are reported
relative to the wire constant -(Delta + t) * (total wire excitations), so
they compare directly with -8t deep in the decoupled regime and with the
five-level value -(Delta_g + sqrt(Delta_g^2 + 16 Omega^2))/2 for
0 <= Delta_g <~ Delta.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from rydwire.exact.solve import lowest_eigenpairs


def _leg_walls(m: int) -> int:
    return m // 2 + 1


def _split(j: int, zeta: int, umax: int) -> tuple[int, int]:
    """Wall position -> (first-leg wall, second-leg wall)."""
    if j <= zeta:
        return j, 1
    return zeta, j - zeta


def five_level_energy(delta_g: float, omega: float) -> float:
    """Gadget-local prediction for the crossing ground energy."""
    return -(delta_g + np.sqrt(delta_g ** 2 + 16.0 * omega ** 2)) / 2.0


def three_level_energy(delta_g: float, omega: float) -> float:
    """Single-wire analog of :func:`five_level_energy`."""
    return -(delta_g + np.sqrt(delta_g ** 2 + 8.0 * omega ** 2)) / 2.0


def single_wire_gadget_model(n: int, m: int, omega: float, delta: float,
                             delta_g: float) -> sp.csr_matrix:
    """One wire of n atoms whose two middle gadget slots carry delta_g."""
    t = omega ** 2 / delta
    a1, a2 = _leg_walls(m), _leg_walls(n - m)
    li = a1 + a2
    nii = a1 * a2
    dim = li + nii

    def ii_index(l1, l2):
        return li + (l1 - 1) * a2 + (l2 - 1)

    rows, cols, vals = [], [], []

    def add(i, j, v):
        rows.append(i)
        cols.append(j)
        vals.append(v)

    for j in range(li):
        add(j, j, -delta_g)
        if j + 1 < li and j + 1 != a1:
            add(j, j + 1, -t)
            add(j + 1, j, -t)
    for l1 in range(1, a1 + 1):
        for l2 in range(1, a2 + 1):
            i = ii_index(l1, l2)
            if l1 < a1:
                add(i, ii_index(l1 + 1, l2), -t)
                add(ii_index(l1 + 1, l2), i, -t)
            if l2 < a2:
                add(i, ii_index(l1, l2 + 1), -t)
                add(ii_index(l1, l2 + 1), i, -t)
    for j in range(1, li + 1):
        l1, l2 = _split(j, a1, a2)
        add(j - 1, ii_index(l1, l2), omega)
        add(ii_index(l1, l2), j - 1, omega)
    return sp.coo_matrix((vals, (rows, cols)), shape=(dim, dim)).tocsr()


def crossing_small_gadget_model(n: int, m: int, omega: float, delta: float,
                                delta_g: float) -> sp.csr_matrix:
    """Two symmetric wires of n atoms each, gadget at first-leg length m."""
    t = omega ** 2 / delta
    a1, a2 = _leg_walls(m), _leg_walls(n - m)
    lw = a1 + a2
    n_i = lw * lw
    n_ii = (a1 * a2) ** 2
    dim = n_i + n_ii

    def i_index(jx, jy):
        return (jx - 1) * lw + (jy - 1)

    def ii_index(l1, l2, l3, l4):
        return n_i + (((l1 - 1) * a2 + (l2 - 1)) * a1 + (l3 - 1)) * a2 + (l4 - 1)

    rows, cols, vals = [], [], []

    def add_sym(i, j, v):
        rows.extend((i, j))
        cols.extend((j, i))
        vals.extend((v, v))

    for jx in range(1, lw + 1):
        for jy in range(1, lw + 1):
            i = i_index(jx, jy)
            rows.append(i)
            cols.append(i)
            vals.append(-delta_g)
            if jx < lw and jx != a1:
                add_sym(i, i_index(jx + 1, jy), -t)
            if jy < lw and jy != a1:
                add_sym(i, i_index(jx, jy + 1), -t)
    for l1 in range(1, a1 + 1):
        for l2 in range(1, a2 + 1):
            for l3 in range(1, a1 + 1):
                for l4 in range(1, a2 + 1):
                    i = ii_index(l1, l2, l3, l4)
                    if l1 < a1:
                        add_sym(i, ii_index(l1 + 1, l2, l3, l4), -t)
                    if l2 < a2:
                        add_sym(i, ii_index(l1, l2 + 1, l3, l4), -t)
                    if l3 < a1:
                        add_sym(i, ii_index(l1, l2, l3 + 1, l4), -t)
                    if l4 < a2:
                        add_sym(i, ii_index(l1, l2, l3, l4 + 1), -t)
    for jx in range(1, lw + 1):
        for jy in range(1, lw + 1):
            l1, l2 = _split(jx, a1, a2)
            l3, l4 = _split(jy, a1, a2)
            add_sym(i_index(jx, jy), ii_index(l1, l2, l3, l4), omega)
    return sp.coo_matrix((vals, (rows, cols)), shape=(dim, dim)).tocsr()


def crossing_ground_energy(n: int, m: int, omega: float, delta: float,
                           delta_g: float) -> float:
    h = crossing_small_gadget_model(n, m, omega, delta, delta_g)
    return lowest_eigenpairs(h, k=1).ground_energy
