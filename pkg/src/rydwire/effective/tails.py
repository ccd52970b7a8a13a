"""Site-dependent diagonal terms induced by van der Waals tails.

Each two-domain-wall basis state of a layout gets the sum of the detunings on
its excited atoms plus the tail interactions over its excited nonblockaded
pairs; referencing to the minimum turns this into a penalty landscape eps(j)
whose spread must stay well below t for blockade-limit physics to survive.
"""

from __future__ import annotations

import numpy as np

from rydwire.encoder import dwspace
from rydwire.encoder.layout import AtomLayout
from rydwire.exact.hamiltonian import Controls, tail_pairs


def dw_diagonal_energies(layout: AtomLayout, controls: Controls,
                         tails: bool = True,
                         tail_cutoff: float | None = None
                         ) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Diagonal energy of every two-domain-wall basis state."""
    sites, masks = dwspace.dw_manifold(layout)
    marr = np.array(masks, dtype=np.uint64)
    energies = np.zeros(len(masks))
    for i in range(layout.n_atoms):
        occ = ((marr >> np.uint64(i)) & np.uint64(1)).astype(float)
        dv = controls.atom_delta(layout, i)
        if dv != 0.0:
            energies -= dv * occ
    if tails:
        if tail_cutoff is None:
            scale = abs(controls.omega) if controls.omega else 1.0
            tail_cutoff = 1e-4 * scale
        for i, j, u in tail_pairs(layout, tail_cutoff):
            occ = (((marr >> np.uint64(i)) & (marr >> np.uint64(j))) & np.uint64(1)).astype(float)
            energies += u * occ
    return sites, energies


def tail_diagonals(layout: AtomLayout, controls: Controls | None = None,
                   tails: bool = True, tail_cutoff: float | None = None
                   ) -> dict[tuple[int, int], float]:
    """eps(j) per wall site, re-referenced so the minimum is zero."""
    if controls is None:
        controls = Controls(omega=0.0, delta=layout.meta["delta"],
                            delta_g=layout.meta.get("delta_g"))
    sites, energies = dw_diagonal_energies(layout, controls, tails=tails,
                                           tail_cutoff=tail_cutoff)
    energies = energies - energies.min()
    # wipe rounding dust so the blockade limit reports exactly zero
    energies[np.abs(energies) < 1e-9 * max(1.0, abs(controls.delta))] = 0.0
    return {site: float(e) for site, e in zip(sites, energies)}
