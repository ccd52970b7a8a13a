"""Bitstring decoding: blockade filter, greedy repair, success accounting."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from rydwire.encoder import dwspace
from rydwire.encoder.layout import AtomLayout
from rydwire.errors import ConfigError


@dataclass
class BitstringSamples:
    """Measured shots: one character per atom, in ``atom_ids`` order."""

    atom_ids: tuple[str, ...]
    strings: list[str]
    load_flags: list[bool] | None = None

    def __post_init__(self):
        for s in self.strings:
            if len(s) != len(self.atom_ids):
                raise ConfigError("string length must equal the atom count")
        if self.load_flags is not None and len(self.load_flags) != len(self.strings):
            raise ConfigError("one load flag per shot required")

    def loaded(self) -> "BitstringSamples":
        if self.load_flags is None:
            return self
        kept = [s for s, ok in zip(self.strings, self.load_flags) if ok]
        return BitstringSamples(self.atom_ids, kept, None)

    @property
    def n_shots(self) -> int:
        return len(self.strings)

    def to_text(self) -> str:
        lines = ["# atoms: " + ",".join(self.atom_ids)]
        flags = self.load_flags or [True] * self.n_shots
        lines += [f"{int(ok)} {s}" for ok, s in zip(flags, self.strings)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitstringSamples":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("# atoms:"):
            raise ConfigError("shot file must start with '# atoms: id1,id2,...'")
        ids = tuple(lines[0].split(":", 1)[1].strip().split(","))
        strings, flags = [], []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) == 2:
                flags.append(parts[0] == "1")
                strings.append(parts[1])
            else:
                flags.append(True)
                strings.append(parts[0])
        return cls(ids, strings, flags)


def layout_sample_ids(layout: AtomLayout,
                      removed: set[str] | None = None) -> tuple[str, ...]:
    removed = removed or set()
    return tuple(a.id for a in layout.atoms if a.id not in removed)


def adjacency_on_ids(layout: AtomLayout, atom_ids: tuple[str, ...]
                     ) -> list[tuple[int, int]]:
    """Blockade pairs reindexed to a sample's atom ordering."""
    pos = {aid: k for k, aid in enumerate(atom_ids)}
    out = []
    for i, j in layout.adjacency:
        ai, aj = layout.atoms[i].id, layout.atoms[j].id
        if ai in pos and aj in pos:
            out.append(tuple(sorted((pos[ai], pos[aj]))))
    return sorted(out)


def solution_strings(layout: AtomLayout, target: str,
                     remove_last_of_one_wire: bool = True
                     ) -> tuple[tuple[str, ...], set[str]]:
    """All strings encoding the MWIS solution of a CWE building block.

    The wire in the 1-logical state contributes the single alternating
    pattern (with its last atom removed under the removal convention); the
    0-logical wire contributes every single-wall pattern with the wall before
    the gadget; the gadget carries its unique compatible excitation.
    """
    meta = layout.meta
    if meta["kind"] not in ("cwe", "cwe-ancilla"):
        raise ConfigError("solution strings are defined for CWE setups")
    if target not in ("10", "01"):
        raise ConfigError("target must be '10' or '01'")
    one_wire = "x" if target == "10" else "y"
    zero_wire = "y" if target == "10" else "x"
    n1 = meta[f"n_{one_wire}"]
    removed = {f"{one_wire}{n1}"} if remove_last_of_one_wire else set()
    atom_ids = layout_sample_ids(layout, removed)
    pos = {aid: k for k, aid in enumerate(atom_ids)}

    one_bits = [f"{one_wire}{k}" for k in range(1, n1 + 1, 2)
                if f"{one_wire}{k}" not in removed]
    gadget = "gx" if one_wire == "x" else "gy"
    n0, m0 = meta[f"n_{zero_wire}"], meta[f"m_{zero_wire}"]
    out = set()
    for s in range(1, m0 // 2 + 2):
        zero_bits = [f"{zero_wire}{k}"
                     for k in dwspace.wire_excited(n0, m0, s, 1)]
        excited = set(one_bits) | set(zero_bits) | {gadget}
        if meta["kind"] == "cwe-ancilla":
            excited |= {"anx", "any"}
        chars = ["1" if aid in excited else "0" for aid in atom_ids]
        out.add("".join(chars))
    return atom_ids, out


def filter_blockade(samples: BitstringSamples,
                    adjacency: list[tuple[int, int]]) -> BitstringSamples:
    """Drop strings exciting any blockaded pair."""
    kept = []
    for s in samples.strings:
        if all(not (s[i] == "1" and s[j] == "1") for i, j in adjacency):
            kept.append(s)
    return BitstringSamples(samples.atom_ids, kept, None)


def greedy_vertex_addition(samples: BitstringSamples,
                           adjacency: list[tuple[int, int]],
                           weights: dict[str, float] | None = None
                           ) -> BitstringSamples:
    """Extend each independent set to maximality.

    Candidates are added in descending weight, ties broken by ascending atom
    id, so the repair is deterministic.
    """
    ids = samples.atom_ids
    weights = weights or {}
    nbrs: dict[int, set[int]] = {k: set() for k in range(len(ids))}
    for i, j in adjacency:
        nbrs[i].add(j)
        nbrs[j].add(i)
    order = sorted(range(len(ids)),
                   key=lambda k: (-weights.get(ids[k], 1.0), ids[k]))
    repaired = []
    for s in samples.strings:
        chosen = {k for k, c in enumerate(s) if c == "1"}
        for k in order:
            if k not in chosen and not (nbrs[k] & chosen):
                chosen.add(k)
        repaired.append("".join("1" if k in chosen else "0"
                                for k in range(len(ids))))
    return BitstringSamples(ids, repaired, None)


@dataclass
class SuccessReport:
    n_loaded: int
    p_raw: float
    p_raw_err: float
    n_filtered: int
    p_blockade: float
    p_blockade_err: float
    p_final: float
    p_final_err: float
    solutions: set[str] = field(default_factory=set)


def _rate(strings: list[str], solutions: set[str]) -> tuple[float, float]:
    n = len(strings)
    if n == 0:
        raise ConfigError("zero shots")
    hits = sum(1 for s in strings if s in solutions)
    p = hits / n
    return p, float(np.sqrt(p * (1.0 - p) / n))


def success_probability(samples: BitstringSamples,
                        adjacency: list[tuple[int, int]],
                        solutions: set[str],
                        weights: dict[str, float] | None = None
                        ) -> SuccessReport:
    """Stage-by-stage success probabilities with binomial errors."""
    loaded = samples.loaded()
    p_raw, e_raw = _rate(loaded.strings, solutions)
    filtered = filter_blockade(loaded, adjacency)
    p_b, e_b = _rate(filtered.strings, solutions)
    repaired = greedy_vertex_addition(filtered, adjacency, weights)
    p_f, e_f = _rate(repaired.strings, solutions)
    return SuccessReport(n_loaded=loaded.n_shots,
                         p_raw=p_raw, p_raw_err=e_raw,
                         n_filtered=filtered.n_shots,
                         p_blockade=p_b, p_blockade_err=e_b,
                         p_final=p_f, p_final_err=e_f,
                         solutions=solutions)
