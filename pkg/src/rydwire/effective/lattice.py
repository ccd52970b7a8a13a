"""Domain-wall hopping lattices.

Sites are labeled ``(j,)`` for a single wire, ``(jx, jy)`` for two-wire
lattices, and ``(jx, jy, tag)`` with tags "Ax", "Ay", "Bx", "By" for ancilla
copy states.  The Hamiltonian is H = -sum_links amp (|i><j| + h.c.)
- sum_sites eps(j) |j><j|; boundary diagonals are grouped so schedules can
redial them without rebuilding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from rydwire.encoder.types import SetupSpec
from rydwire.errors import ConfigError
from rydwire.exact.solve import SpectrumResult, lowest_eigenpairs

DENSE_SITES = 600

Site = tuple


@dataclass
class DomainWallLattice:
    """Sites, hopping links, and diagonal terms of the effective model."""

    sites: list[Site]
    links: list[tuple[int, int, float]]
    diagonals: np.ndarray
    boundary_groups: dict[str, list[int]] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._index = {s: i for i, s in enumerate(self.sites)}
        self._hop = None

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    def index(self, site: Site) -> int:
        return self._index[site]

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.links if a == i or b == i)

    def hop_matrix(self) -> sp.csr_matrix:
        """Symmetric matrix of link amplitudes (positive entries)."""
        if self._hop is None:
            n = self.n_sites
            if self.links:
                r, c, v = zip(*self.links)
                m = sp.coo_matrix((v, (r, c)), shape=(n, n))
                self._hop = (m + m.T).tocsr()
            else:
                self._hop = sp.csr_matrix((n, n))
        return self._hop

    def hamiltonian(self, t_scale: float = 1.0,
                    group_eps: dict[str, float] | None = None,
                    extra_diag: np.ndarray | None = None) -> sp.csr_matrix:
        """H with all link amplitudes scaled by ``t_scale``.

        ``group_eps`` adds boundary detunings (entering with a minus sign) on
        the named groups; ``extra_diag`` adds site-dependent penalties
        (entering with a plus sign, e.g. interaction-tail terms).
        """
        diag = -self.diagonals.astype(float).copy()
        if group_eps:
            for name, val in group_eps.items():
                if val == 0.0:
                    continue
                diag[self.boundary_groups.get(name, [])] -= val
        if extra_diag is not None:
            diag = diag + extra_diag
        return (-t_scale * self.hop_matrix() + sp.diags(diag)).tocsr()

    def to_json_dict(self) -> dict:
        return {
            "sites": [list(s) for s in self.sites],
            "links": [[a, b, amp] for a, b, amp in self.links],
            "diagonals": [float(d) for d in self.diagonals],
            "groups": {k: list(v) for k, v in sorted(self.boundary_groups.items())},
        }


def solve_lattice(lattice: DomainWallLattice, k: int,
                  group_eps: dict[str, float] | None = None,
                  extra_diag: np.ndarray | None = None,
                  t_scale: float = 1.0) -> SpectrumResult:
    """k lowest eigenpairs; dense below 2000 sites, Lanczos above."""
    h = lattice.hamiltonian(t_scale=t_scale, group_eps=group_eps,
                            extra_diag=extra_diag)
    if lattice.n_sites <= DENSE_SITES:
        vals, vecs = np.linalg.eigh(h.toarray())
        vals, vecs = vals[:k], vecs[:, :k]
        res = np.linalg.norm(h.dot(vecs) - vecs * vals[None, :], axis=0)
        return SpectrumResult(eigenvalues=vals, eigenvectors=vecs, residuals=res)
    return lowest_eigenpairs(h, k)


# -- builders ---------------------------------------------------------------

def build_dw_1d(length: int, eps_i: float = 0.0, eps_f: float = 0.0,
                t: float = 1.0) -> DomainWallLattice:
    """Single-particle hopping on a line of ``length`` wall positions."""
    if length < 2 or t <= 0:
        raise ConfigError("need length >= 2 and t > 0")
    sites = [(j,) for j in range(1, length + 1)]
    links = [(j, j + 1, t) for j in range(length - 1)]
    diag = np.zeros(length)
    diag[0], diag[-1] = eps_i, eps_f
    groups = {"i_x": [0], "f_x": [length - 1]}
    return DomainWallLattice(sites, links, diag, groups,
                             meta={"kind": "1d", "t": t})


def build_lshape(lx: int, ly: int, zx: int, zy: int, t: float, tp: float,
                 eps: dict[str, float] | None = None,
                 crossing: bool = False) -> DomainWallLattice:
    """Two-wire wall lattice: full rectangle (crossing) or L shape (CWE).

    Straight hops carry t except the hops through zeta_w which carry tp; the
    gadget adds the diagonal link (zx+1, zy) <-> (zx, zy+1) and, for the
    crossing only, (zx, zy) <-> (zx+1, zy+1), both with tp.
    """
    if not (1 <= zx < lx and 1 <= zy < ly):
        raise ConfigError("need 1 <= zeta_w < L_w")
    eps = eps or {}

    def keep(jx, jy):
        return crossing or not (jx > zx and jy > zy)

    sites = [(jx, jy) for jx in range(1, lx + 1) for jy in range(1, ly + 1)
             if keep(jx, jy)]
    lat = {}
    for i, s in enumerate(sites):
        lat[s] = i
    links = []
    for (jx, jy), i in lat.items():
        nxt = (jx + 1, jy)
        if nxt in lat:
            links.append((i, lat[nxt], tp if jx == zx else t))
        nxt = (jx, jy + 1)
        if nxt in lat:
            links.append((i, lat[nxt], tp if jy == zy else t))
    if (zx + 1, zy) in lat and (zx, zy + 1) in lat:
        links.append((lat[(zx + 1, zy)], lat[(zx, zy + 1)], tp))
    if crossing:
        links.append((lat[(zx, zy)], lat[(zx + 1, zy + 1)], tp))

    groups = {
        "i_x": [i for (jx, jy), i in lat.items() if jx == 1],
        "f_x": [i for (jx, jy), i in lat.items() if jx == lx],
        "i_y": [i for (jx, jy), i in lat.items() if jy == 1],
        "f_y": [i for (jx, jy), i in lat.items() if jy == ly],
    }
    diag = np.zeros(len(sites))
    for name, val in eps.items():
        if val:
            diag[groups[name]] += val
    kind = "crossing" if crossing else "cwe"
    meta = {"kind": kind, "lx": lx, "ly": ly, "zx": zx, "zy": zy,
            "t": t, "tp": tp}
    return DomainWallLattice(sites, links, diag, groups, meta=meta)


def build_dw_crossing(spec: SetupSpec, t: float, tp: float | None = None,
                      eps: dict[str, float] | None = None) -> DomainWallLattice:
    """Rectangular lattice of the crossing setup: L_w = N_w/2 + 2."""
    if spec.kind != "crossing":
        raise ConfigError("expected a crossing spec")
    if tp is None:
        tp = t / spec.gadget_ratio
    return build_lshape(spec.n_x // 2 + 2, spec.n_y // 2 + 2,
                        spec.zeta("x"), spec.zeta("y"), t, tp, eps,
                        crossing=True)


def build_dw_cwe(spec: SetupSpec, t: float, tp: float | None = None,
                 eps: dict[str, float] | None = None) -> DomainWallLattice:
    """L-shaped lattice of the CWE setup: L_w = N_w/2 + 1."""
    if spec.kind not in ("cwe", "cwe-ancilla"):
        raise ConfigError("expected a cwe spec")
    if tp is None:
        tp = t / spec.gadget_ratio
    return build_lshape(spec.n_x // 2 + 1, spec.n_y // 2 + 1,
                        spec.zeta("x"), spec.zeta("y"), t, tp, eps,
                        crossing=False)


def build_dw_ancilla(spec: SetupSpec, t: float,
                     eps_a: float = 0.0, eps_b: float = 0.0,
                     copy_hop: float | None = None,
                     b_hop: float | None = None,
                     eps: dict[str, float] | None = None,
                     tp: float | None = None) -> DomainWallLattice:
    """CWE lattice extended by copy states along the nonlogical boundaries.

    Copies sit over the lead edge sites facing the forbidden quadrant
    (jx >= zx+2 at jy = zy and mirrored), hop to their parents and among
    themselves with ``copy_hop`` (t when the ancilla Rabi drives match the
    wire drive), and each copy line ends in one extra corner copy reached
    with ``b_hop``.
    """
    base = build_dw_cwe(spec, t, tp=tp, eps=eps)
    lx, ly = base.meta["lx"], base.meta["ly"]
    zx, zy = base.meta["zx"], base.meta["zy"]
    copy_hop = t if copy_hop is None else copy_hop
    b_hop = t if b_hop is None else b_hop

    sites = list(base.sites)
    links = list(base.links)
    groups = {k: list(v) for k, v in base.boundary_groups.items()}
    groups["A"] = []
    groups["B"] = []
    idx = {s: i for i, s in enumerate(sites)}
    parent_groups = {}
    for name in ("i_x", "f_x", "i_y", "f_y"):
        for i in base.boundary_groups[name]:
            parent_groups.setdefault(base.sites[i], []).append(name)

    def add_site(site, parent):
        i = idx[site] = len(sites)
        sites.append(site)
        groups["A"].append(i)
        # a copy keeps the wall positions of its parent, hence also its
        # wire-boundary detunings
        for name in parent_groups.get(parent, []):
            groups[name].append(i)
        return i

    def add_copy_line(tag, btag, line):
        prev = None
        for p in line:
            i = add_site(p + (tag,), p)
            links.append((idx[p], i, copy_hop))
            if prev is not None:
                links.append((prev, i, copy_hop))
            prev = i
        if line:
            b = add_site(line[0] + (btag,), line[0])
            groups["B"].append(b)
            links.append((idx[line[0] + (tag,)], b, b_hop))

    add_copy_line("Ax", "Bx", [(jx, zy) for jx in range(zx + 2, lx + 1)])
    add_copy_line("Ay", "By", [(zx, jy) for jy in range(zy + 2, ly + 1)])

    diag = np.zeros(len(sites))
    diag[:base.n_sites] = base.diagonals
    if eps:
        for name in ("i_x", "f_x", "i_y", "f_y"):
            val = eps.get(name, 0.0)
            if val:
                for i in groups[name]:
                    if i >= base.n_sites:
                        diag[i] += val
    if eps_a:
        diag[groups["A"]] += eps_a
    if eps_b:
        diag[groups["B"]] += eps_b
    meta = dict(base.meta, kind="cwe-ancilla", copy_hop=copy_hop, b_hop=b_hop)
    return DomainWallLattice(sites, links, diag, groups, meta=meta)


def balanced_hamiltonian(lattice: DomainWallLattice, t: float) -> sp.csr_matrix:
    """H with the site-resolved balance diagonals eps(j) = t(4 - #links)."""
    want, _ = apply_balance_condition(lattice, t)
    return (-lattice.hop_matrix() - sp.diags(want)).tocsr()


def balance_group_eps(lattice: DomainWallLattice, t: float) -> dict[str, float]:
    """Boundary-group detunings realizing the balance condition exactly.

    Generically this is eps = t on the wire groups and the copies and 2t on
    the corner copies, but geometries where a copy line touches a wire
    boundary shift the corner-copy value; the least-squares solve handles all
    of them and verifies the realization is exact.
    """
    want, warnings = apply_balance_condition(lattice, t)
    if warnings:
        raise ConfigError(f"balance not realizable: uncontrolled sites {warnings[:4]}")
    names = sorted(lattice.boundary_groups)
    a = np.zeros((lattice.n_sites, len(names)))
    for k, name in enumerate(names):
        a[lattice.boundary_groups[name], k] = 1.0
    coef, *_ = np.linalg.lstsq(a, want, rcond=None)
    if np.max(np.abs(a @ coef - want)) > 1e-9 * max(t, 1.0):
        raise ConfigError("group detunings cannot realize the balance condition")
    return {name: float(c) for name, c in zip(names, coef)}


def apply_balance_condition(lattice: DomainWallLattice,
                            t: float) -> tuple[np.ndarray, list[Site]]:
    """Diagonals eps(j) = t * (4 - #links(j)) making the uniform state flat.

    Returns the diagonal vector and the list of sites that need a detuning
    but offer no control (nonlogical boundary of a plain CWE lattice).
    """
    deg = np.zeros(lattice.n_sites, dtype=int)
    for a, b, _ in lattice.links:
        deg[a] += 1
        deg[b] += 1
    want = t * (4.0 - deg)
    controllable = set()
    for name, members in lattice.boundary_groups.items():
        controllable.update(members)
    warnings = [lattice.sites[i] for i in range(lattice.n_sites)
                if want[i] != 0.0 and i not in controllable]
    return want, warnings
