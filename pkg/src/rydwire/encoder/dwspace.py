"""Domain-wall state bookkeeping for wire and gadget layouts.

A wire of N atoms hosts a single domain wall at positions j = 1..N/2+1; the
shared gadget adds one more slot per wire (the wall parked on either side of
the gadget at identical leg patterns), so two intersecting wires span
j_w = 1..N_w/2+2 with the through-gadget position at zeta_w = m_w/2+1.  For
the CWE gadget the quadrant j_x > zeta_x and j_y > zeta_y is forbidden.
"""

from __future__ import annotations

from rydwire.encoder.layout import AtomLayout
from rydwire.errors import ConfigError


def wall_extent(n: int) -> int:
    """Number of wall positions along one wire of a two-wire layout."""
    return n // 2 + 2


def leg_excited(m_leg: int, wall: int) -> list[int]:
    """Excited local positions (1-based) of a leg with its wall at ``wall``.

    Positions up to 2*(wall-1) carry the 1-order (odd excited), the rest the
    0-order (even excited).
    """
    flipped = 2 * (wall - 1)
    out = [k for k in range(1, flipped + 1, 2)]
    out += [k for k in range(flipped + 2, m_leg + 1, 2)]
    return out


def wire_excited(n: int, m: int, s: int, u: int) -> list[int]:
    """Excited wire positions for first-leg wall s and second-leg wall u."""
    out = list(leg_excited(m, s))
    out += [m + k for k in leg_excited(n - m, u)]
    return out


def decode_wall(n: int, m: int, j: int) -> tuple[int, int, int]:
    """Split wall position j into (s, u, side).

    side 2 means the gadget still continues the 0-order of the wire
    (j <= zeta), side 1 that the 1-order has passed through it.
    """
    zeta = m // 2 + 1
    if not 1 <= j <= wall_extent(n):
        raise ConfigError(f"wall position {j} outside 1..{wall_extent(n)}")
    if j <= zeta:
        return j, 1, 2
    return zeta, j - zeta, 1


_CWE_GADGET = {(2, 2): "gc", (1, 2): "gx", (2, 1): "gy"}


def dw_state_ids(layout: AtomLayout, jx: int, jy: int) -> list[str]:
    """Excited atom ids of the two-domain-wall basis state (jx, jy)."""
    meta = layout.meta
    kind = meta["kind"]
    sx, ux, side_x = decode_wall(meta["n_x"], meta["m_x"], jx)
    sy, uy, side_y = decode_wall(meta["n_y"], meta["m_y"], jy)
    ids = [f"x{k}" for k in wire_excited(meta["n_x"], meta["m_x"], sx, ux)]
    ids += [f"y{k}" for k in wire_excited(meta["n_y"], meta["m_y"], sy, uy)]
    if kind == "crossing":
        ids.append(f"q{side_x}{side_y}")
    elif kind in ("cwe", "cwe-ancilla"):
        gadget = _CWE_GADGET.get((side_x, side_y))
        if gadget is None:
            raise ConfigError(f"site ({jx}, {jy}) lies in the forbidden quadrant")
        ids.append(gadget)
        if kind == "cwe-ancilla":
            ids += ["anx", "any"]
    else:
        raise ConfigError(f"no two-wall space for kind {kind!r}")
    return ids


def dw_state_mask(layout: AtomLayout, jx: int, jy: int) -> int:
    mask = 0
    for aid in dw_state_ids(layout, jx, jy):
        mask |= 1 << layout.index(aid)
    return mask


def dw_sites(layout: AtomLayout) -> list[tuple[int, int]]:
    """Lattice sites of the layout's two-domain-wall space, row-major."""
    meta = layout.meta
    lx, ly = wall_extent(meta["n_x"]), wall_extent(meta["n_y"])
    zx, zy = meta["m_x"] // 2 + 1, meta["m_y"] // 2 + 1
    forbidden = meta["kind"] in ("cwe", "cwe-ancilla")
    return [(jx, jy) for jx in range(1, lx + 1) for jy in range(1, ly + 1)
            if not (forbidden and jx > zx and jy > zy)]


def dw_manifold(layout: AtomLayout) -> tuple[list[tuple[int, int]], list[int]]:
    """Site labels and basis bitmasks of the two-domain-wall space."""
    sites = dw_sites(layout)
    return sites, [dw_state_mask(layout, jx, jy) for jx, jy in sites]


def single_wire_masks(layout: AtomLayout) -> list[int]:
    """Bitmasks of the N/2+1 wall states of a single vertex wire."""
    n = layout.meta["n_x"]
    masks = []
    for j in range(1, n // 2 + 2):
        mask = 0
        for k in leg_excited(n, j):
            mask |= 1 << layout.index(f"x{k}")
        masks.append(mask)
    return masks
