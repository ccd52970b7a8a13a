"""Wall-correlation maps with sampling errors from measured shots."""

from __future__ import annotations

import numpy as np

from rydwire.encoder.layout import AtomLayout
from rydwire.errors import ConfigError
from rydwire.exact.observables import wall_projector_masks
from rydwire.postprocess.pipeline import BitstringSamples


def _masks_on_ids(layout: AtomLayout, wire: str,
                  atom_ids: tuple[str, ...]) -> dict[int, int]:
    """Reindex the wall projector masks to a sample's atom ordering."""
    pos = {aid: k for k, aid in enumerate(atom_ids)}
    out = {}
    for j, mask in wall_projector_masks(layout, wire).items():
        bits = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            aid = layout.atoms[i].id
            if aid in pos:
                bits |= 1 << pos[aid]
            m &= m - 1
        out[j] = bits
    return out


def estimate_c_with_errors(layout: AtomLayout, samples: BitstringSamples
                           ) -> dict[tuple[int, int], tuple[float, float]]:
    """Mean and standard error of C(j) over the shots.

    sigma(j) uses the sample-mean variance sum (C_s - mean)^2 / (N (N - 1));
    per-shot values are 0/1 products of ground-state projectors.
    """
    shots = samples.loaded()
    n = shots.n_shots
    if n < 2:
        raise ConfigError("need at least 2 shots for an error estimate")
    masks_x = _masks_on_ids(layout, "x", shots.atom_ids)
    masks_y = _masks_on_ids(layout, "y", shots.atom_ids)
    bits = np.array([int(s[::-1], 2) for s in shots.strings], dtype=object)

    def indicator(mask: int) -> np.ndarray:
        return np.array([(b & mask) == 0 for b in bits], dtype=float)

    ind_x = {j: indicator(m) for j, m in masks_x.items()}
    ind_y = {j: indicator(m) for j, m in masks_y.items()}
    out = {}
    for jx, ix in ind_x.items():
        for jy, iy in ind_y.items():
            c = ix * iy
            mean = float(c.mean())
            sigma = float(np.sqrt(np.sum((c - mean) ** 2) / (n * (n - 1))))
            out[(jx, jy)] = (mean, sigma)
    return out
