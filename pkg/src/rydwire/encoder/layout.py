"""Atom layouts: positions, roles, blockade adjacency, serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from rydwire.constants import MIN_ATOM_DISTANCE_UM
from rydwire.errors import ConfigError

ROLES = (
    "bulk",
    "boundary-initial",
    "boundary-final",
    "gadget-Gx",
    "gadget-Gy",
    "gadget-Gc",
    "crossing-gadget",
    "ancilla-A",
    "ancilla-AN",
    "ancilla-B",
)

GADGET_ROLES = ("gadget-Gx", "gadget-Gy", "gadget-Gc", "crossing-gadget")
ANCILLA_ROLES = ("ancilla-A", "ancilla-AN", "ancilla-B")


@dataclass(frozen=True)
class Atom:
    id: str
    x_um: float
    y_um: float
    role: str
    wire: str  # "x", "y", or "none"

    def __post_init__(self):
        if self.role not in ROLES:
            raise ConfigError(f"unknown atom role {self.role!r}")
        if self.wire not in ("x", "y", "none"):
            raise ConfigError(f"unknown wire tag {self.wire!r}")


@dataclass
class AtomLayout:
    """The physical encoding: atoms, adjacency, and control bindings.

    ``adjacency`` holds index pairs (i < j) of blockaded atoms.  In
    ``unit-disk`` mode it is derived from positions and the blockade radius;
    ancilla gadgets use ``declared`` mode where the constraint graph is given
    explicitly and positions are indicative only.
    """

    atoms: list[Atom]
    c6: float
    rb_um: float
    adjacency: frozenset[tuple[int, int]]
    adjacency_mode: str = "unit-disk"
    detuning_offsets: dict[str, float] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    # -- lookups ----------------------------------------------------------

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def index(self, atom_id: str) -> int:
        try:
            return self._index_map[atom_id]
        except AttributeError:
            object.__setattr__(self, "_index_map",
                               {a.id: i for i, a in enumerate(self.atoms)})
            return self._index_map[atom_id]

    def positions(self) -> np.ndarray:
        return np.array([(a.x_um, a.y_um) for a in self.atoms])

    def neighbor_masks(self) -> list[int]:
        """Bitmask of blockaded partners per atom index."""
        masks = [0] * self.n_atoms
        for i, j in self.adjacency:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def atoms_by_role(self, role: str) -> list[int]:
        return [i for i, a in enumerate(self.atoms) if a.role == role]

    def wire_atoms(self, wire: str) -> list[int]:
        """Indices of the vertex-wire atoms of ``wire`` in wire order 1..N."""
        return [self.index(f"{wire}{k}") for k in range(1, self.meta[f"n_{wire}"] + 1)]

    # -- validation --------------------------------------------------------

    def validate(self):
        """Check symmetry, minimum distances, and adjacency consistency."""
        pos = self.positions()
        n = self.n_atoms
        for i in range(n):
            d = np.hypot(*(pos[i + 1:] - pos[i]).T)
            if d.size and d.min() < MIN_ATOM_DISTANCE_UM - 1e-9:
                j = i + 1 + int(np.argmin(d))
                raise ConfigError(
                    f"atoms {self.atoms[i].id} and {self.atoms[j].id} are "
                    f"{d.min():.3f} um apart (minimum {MIN_ATOM_DISTANCE_UM})")
        for i, j in self.adjacency:
            if not (0 <= i < j < n):
                raise ConfigError(f"adjacency pair ({i}, {j}) out of range or unsorted")
        if self.adjacency_mode == "unit-disk":
            derived = unit_disk_pairs(pos, self.rb_um)
            if derived != set(self.adjacency):
                raise ConfigError("adjacency inconsistent with positions and R_b")
        return self


def unit_disk_pairs(pos: np.ndarray, radius: float) -> set[tuple[int, int]]:
    """All index pairs closer than ``radius``."""
    n = len(pos)
    diff = pos[:, None, :] - pos[None, :, :]
    d = np.hypot(diff[..., 0], diff[..., 1])
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] < radius:
                out.add((i, j))
    return out


# -- JSON interface ---------------------------------------------------------
#
# {atoms: [{id, x_um, y_um, role, wire}], constants: {c6}, adjacency: [[i,j]]}
# Field order is fixed and floats carry 12 significant digits so that files
# round-trip byte-exactly.

def _f12(x: float) -> float:
    return float(format(float(x), ".12g"))


def layout_to_json(layout: AtomLayout) -> str:
    doc = {
        "atoms": [
            {"id": a.id, "x_um": _f12(a.x_um), "y_um": _f12(a.y_um),
             "role": a.role, "wire": a.wire}
            for a in layout.atoms
        ],
        "constants": {"c6": _f12(layout.c6), "rb_um": _f12(layout.rb_um)},
        "adjacency": sorted([list(p) for p in layout.adjacency]),
        "adjacency_mode": layout.adjacency_mode,
    }
    return json.dumps(doc, indent=1, sort_keys=False)


def layout_from_json(text: str) -> AtomLayout:
    doc = json.loads(text)
    atoms = [Atom(d["id"], float(d["x_um"]), float(d["y_um"]), d["role"], d["wire"])
             for d in doc["atoms"]]
    adjacency = frozenset(tuple(sorted(p)) for p in doc["adjacency"])
    return AtomLayout(atoms=atoms, c6=float(doc["constants"]["c6"]),
                      rb_um=float(doc["constants"]["rb_um"]),
                      adjacency=adjacency,
                      adjacency_mode=doc.get("adjacency_mode", "unit-disk"))
