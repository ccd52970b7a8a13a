"""Observables on exact states: susceptibility, densities, entropy, walls."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from rydwire.encoder.layout import GADGET_ROLES, AtomLayout
from rydwire.errors import ConfigError, DegenerateGroundStateError, ResourceGuardError
from rydwire.exact.basis import ConstrainedBasis
from rydwire.exact.solve import ground_state


class ChiValue(NamedTuple):
    chi: float
    degenerate: bool


def fidelity_susceptibility(ground_a: np.ndarray, ground_b: np.ndarray,
                            dlam: float) -> float:
    """chi = -(2/dlam^2) ln |<GS_a|GS_b>| with the overlap phase fixed."""
    ov = abs(float(np.dot(ground_a, ground_b)))
    ov = min(ov, 1.0)
    if ov == 0.0:
        return float("inf")
    return -2.0 / dlam ** 2 * np.log(ov)


def chi_sweep(ham_at: Callable[[float], object], lams: np.ndarray,
              dlam: float) -> list[ChiValue]:
    """Susceptibility along a parameter grid; degeneracies are flagged."""
    out = []
    cache: dict[float, np.ndarray | None] = {}

    def gs(lam):
        if lam not in cache:
            try:
                cache[lam] = ground_state(ham_at(lam))[1]
            except DegenerateGroundStateError:
                cache[lam] = None
        return cache[lam]

    for lam in lams:
        a, b = gs(float(lam)), gs(float(lam) + dlam)
        if a is None or b is None:
            out.append(ChiValue(float("nan"), True))
        else:
            out.append(ChiValue(fidelity_susceptibility(a, b, dlam), False))
    return out


def gadget_density(layout: AtomLayout, basis: ConstrainedBasis,
                   state: np.ndarray) -> float:
    """Expected number of Rydberg excitations on the gadget atoms."""
    probs = np.abs(state) ** 2
    total = 0.0
    for i, a in enumerate(layout.atoms):
        if a.role in GADGET_ROLES:
            total += float(probs @ basis.occupation(i))
    return total


def bipartite_entropy(basis: ConstrainedBasis, state: np.ndarray,
                      partition: list[int], max_elements: int = 40_000_000) -> float:
    """Von Neumann entropy of the reduced state on ``partition`` atoms."""
    if not partition or len(partition) >= basis.n_atoms:
        raise ConfigError("partition must be a nonempty proper atom subset")
    left_mask = np.uint64(sum(1 << i for i in partition))
    right_mask = np.uint64((1 << basis.n_atoms) - 1) & ~left_mask
    left_keys = basis.states & left_mask
    right_keys = basis.states & right_mask
    ul, il = np.unique(left_keys, return_inverse=True)
    ur, ir = np.unique(right_keys, return_inverse=True)
    if ul.size * ur.size > max_elements:
        raise ResourceGuardError("bipartition matrix exceeds the dense guard")
    m = np.zeros((ul.size, ur.size))
    m[il, ir] = state
    s = np.linalg.svd(m, compute_uv=False)
    p = s ** 2
    p = p[p > 1e-15]
    return float(-np.sum(p * np.log(p)))


# -- two-domain-wall correlation operator ------------------------------------

def _atom_mask(layout: AtomLayout, ids: list[str]) -> int:
    mask = 0
    for aid in ids:
        try:
            mask |= 1 << layout.index(aid)
        except KeyError:
            continue  # removed atom: counts as ground
    return mask


def wall_projector_masks(layout: AtomLayout, wire: str) -> dict[int, int]:
    """Ground-projector atom sets marking each wall position of one wire.

    Site j is marked by the product of p_v = 1 - n_v over: the plain wall
    pair (2j-2, 2j-1) of the wire away from the gadget; {w_m, Gw} at
    j = zeta_w; and {x_{m+1}, y_{m+1}, Gw, Gc} at j = zeta_w + 1.
    """
    meta = layout.meta
    if meta["kind"] not in ("cwe", "cwe-ancilla"):
        raise ConfigError("wall correlators are defined for CWE layouts")
    other = "y" if wire == "x" else "x"
    n, m = meta[f"n_{wire}"], meta[f"m_{wire}"]
    m_other = meta[f"m_{other}"]
    zeta = m // 2 + 1
    gw = "gx" if wire == "x" else "gy"
    masks = {}
    for j in range(1, n // 2 + 2):
        if j == zeta:
            ids = [f"{wire}{m}", gw]
        elif j == zeta + 1:
            ids = [f"{wire}{m + 1}", f"{other}{m_other + 1}", gw, "gc"]
        else:
            ids = [f"{wire}{k}" for k in (2 * j - 2, 2 * j - 1) if 1 <= k <= n]
        masks[j] = _atom_mask(layout, ids)
    return masks


def correlation_map(layout: AtomLayout, basis: ConstrainedBasis,
                    state: np.ndarray) -> dict[tuple[int, int], float]:
    """<C(j)> = <C(j_x) C(j_y)> for the exact state, over the wall grid."""
    probs = np.abs(state) ** 2
    mx = wall_projector_masks(layout, "x")
    my = wall_projector_masks(layout, "y")
    ind_x = {j: basis.vacancy_indicator(m) for j, m in mx.items()}
    ind_y = {j: basis.vacancy_indicator(m) for j, m in my.items()}
    out = {}
    for jx, ix in ind_x.items():
        wx = probs * ix
        for jy, iy in ind_y.items():
            out[(jx, jy)] = float(wx @ iy)
    return out


def correlation_from_samples(layout: AtomLayout,
                             samples: np.ndarray) -> dict[tuple[int, int], float]:
    """Sample-mean estimate of <C(j)> from measured bitmasks."""
    samples = np.asarray(samples, dtype=np.uint64)
    mx = wall_projector_masks(layout, "x")
    my = wall_projector_masks(layout, "y")
    out = {}
    for jx, maskx in mx.items():
        okx = (samples & np.uint64(maskx)) == 0
        for jy, masky in my.items():
            oky = (samples & np.uint64(masky)) == 0
            out[(jx, jy)] = float(np.mean(okx & oky))
    return out


def sample_bitstrings(basis: ConstrainedBasis, state: np.ndarray, n_shots: int,
                      rng: np.random.Generator) -> np.ndarray:
    """Draw measurement outcomes (bitmasks) from |psi|^2."""
    probs = np.abs(state) ** 2
    probs = probs / probs.sum()
    idx = rng.choice(basis.dim, size=n_shots, p=probs)
    return basis.states[idx]
