"""Linear-element Helmholtz eigensolver on structured L-shape meshes."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from rydwire.continuum.domain import ContinuumSpectrum, LShapeDomain
from rydwire.errors import ConfigError, NumericalError


def _grid_1d(limit: float, h: float) -> np.ndarray:
    n = max(int(round(limit / h)), 1)
    return np.linspace(0.0, n * h, n + 1)


def _tri_matrices(p0, p1, p2):
    """P1 stiffness and consistent mass for one triangle."""
    x = np.array([p0[0], p1[0], p2[0]])
    y = np.array([p0[1], p1[1], p2[1]])
    area = 0.5 * abs((x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]))
    if area <= 0:
        raise NumericalError("degenerate mesh triangle")
    b = np.array([y[1] - y[2], y[2] - y[0], y[0] - y[1]])
    c = np.array([x[2] - x[1], x[0] - x[2], x[1] - x[0]])
    k = (np.outer(b, b) + np.outer(c, c)) / (4.0 * area)
    m = area / 12.0 * (np.ones((3, 3)) + np.eye(3))
    return k, m


def _assemble(domain: LShapeDomain, h: float):
    xs = _grid_1d(domain.length, h)
    ys = _grid_1d(domain.length, h)
    z1 = h * round(domain.zeta1 / h)
    z2 = h * round(domain.zeta2 / h)
    if z1 <= 0 or z2 <= 0 or min(domain.zeta1, domain.zeta2) / h < 8:
        raise ConfigError("mesh too coarse: need >= 8 elements across each lead")
    tol = 1e-9 * h

    def cell_inside(i, j):
        return xs[i + 1] <= z1 + tol or ys[j + 1] <= z2 + tol

    nx, ny = xs.size - 1, ys.size - 1
    node_id = -np.ones((nx + 1, ny + 1), dtype=int)
    cells = [(i, j) for i in range(nx) for j in range(ny) if cell_inside(i, j)]
    for i, j in cells:
        for di in (0, 1):
            for dj in (0, 1):
                node_id[i + di, j + dj] = 0
    used = np.argwhere(node_id >= 0)
    for n, (i, j) in enumerate(used):
        node_id[i, j] = n
    coords = np.column_stack([xs[used[:, 0]], ys[used[:, 1]]])

    inside_cell = np.zeros((nx + 2, ny + 2), dtype=bool)
    for i, j in cells:
        inside_cell[i + 1, j + 1] = True
    interior = []
    for i, j in used:
        if (inside_cell[i, j] and inside_cell[i + 1, j]
                and inside_cell[i, j + 1] and inside_cell[i + 1, j + 1]):
            interior.append(node_id[i, j])
    interior = np.array(sorted(interior), dtype=int)

    rows, cols, kv, mv = [], [], [], []
    for i, j in cells:
        quad = [node_id[i, j], node_id[i + 1, j],
                node_id[i + 1, j + 1], node_id[i, j + 1]]
        pts = [coords[q] for q in quad]
        for tri in ((0, 1, 2), (0, 2, 3)):
            ids = [quad[t] for t in tri]
            k, m = _tri_matrices(*[pts[t] for t in tri])
            for a in range(3):
                for b in range(3):
                    rows.append(ids[a])
                    cols.append(ids[b])
                    kv.append(k[a, b])
                    mv.append(m[a, b])
    n_nodes = coords.shape[0]
    kmat = sp.coo_matrix((kv, (rows, cols)), shape=(n_nodes, n_nodes)).tocsr()
    mmat = sp.coo_matrix((mv, (rows, cols)), shape=(n_nodes, n_nodes)).tocsr()
    return kmat[interior][:, interior], mmat[interior][:, interior], coords[interior]


def helmholtz_fem(domain: LShapeDomain, h: float, k: int = 4,
                  return_vectors: bool = False):
    """Lowest k eigenvalues of -laplace psi = k^2 psi with Dirichlet walls.

    Eigenvalues come from the generalized problem K psi = k^2 M psi via
    shift-invert at zero; linear elements converge at order ~h^2 away from
    the re-entrant corner, which degrades the rate toward h^(4/3) there.
    """
    kmat, mmat, coords = _assemble(domain, h)
    if kmat.shape[0] <= k:
        raise ConfigError("mesh too coarse for the requested mode count")
    vals, vecs = spla.eigsh(kmat, k=k, M=mmat, sigma=0.0, which="LM")
    order = np.argsort(vals)
    vals = vals[order]
    spec = ContinuumSpectrum(
        k_squared=vals,
        k_threshold_squared=domain.k_threshold ** 2,
        meta={"h": h, "n_dof": kmat.shape[0]})
    if return_vectors:
        return spec, vecs[:, order], coords
    return spec


def fem_ground_extrapolated(domain: LShapeDomain, h0: float,
                            levels: int = 3) -> tuple[float, float]:
    """Richardson-extrapolated ground k^2 using h0, h0/2, ..., plus the rate.

    The convergence order is estimated from the last three levels, so the
    corner-limited regime is handled without assuming the clean h^2 law.
    """
    if levels < 3:
        raise ConfigError("need at least 3 refinement levels")
    hs = [h0 / 2 ** i for i in range(levels)]
    vals = [helmholtz_fem(domain, h, k=1).ground for h in hs]
    d1 = vals[-3] - vals[-2]
    d2 = vals[-2] - vals[-1]
    if d2 == 0 or d1 / d2 <= 1.0:
        return vals[-1], float("nan")
    p = np.log2(d1 / d2)
    extrap = vals[-1] - d2 / (2 ** p - 1.0)
    return float(extrap), float(p)
