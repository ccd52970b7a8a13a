"""Builders compiling setup specs into atom layouts.

Geometry conventions (in units of the blockade radius R_b): wire neighbors
sit at 0.9 R_b; the two legs of a wire stop at distance ``_LEG_GAP`` from the
intersection point; the gadget atoms occupy corners of a small square of
half-side ``_GADGET_HALF`` centered on the intersection, so that each gadget
atom blockades exactly the two nearest leg ends, all gadget atoms blockade
each other, and no leg end blockades any atom of the other wire.
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from rydwire.constants import DEFAULT_C6, NEIGHBOR_SPACING, blockade_radius
from rydwire.encoder.layout import Atom, AtomLayout, unit_disk_pairs
from rydwire.encoder.types import MWISInstance, SetupSpec
from rydwire.errors import ConfigError

_LEG_GAP = 0.85          # center to nearest wire atom
_GADGET_HALF = 0.45 / np.sqrt(2.0)   # gadget square half-side; side = 0.9/sqrt(2)

# Gadget corner naming: q{s}{s'} with s the x-side (1: before the gadget,
# i.e. the x_m side; 2: after it) and s' the y-side analogously.
_CORNER_XY = {
    (1, 1): (-1, +1),
    (1, 2): (-1, -1),
    (2, 1): (+1, +1),
    (2, 2): (+1, -1),
}


def _wire_atoms(wire: str, n: int, m: int, rb: float) -> list[Atom]:
    spacing = NEIGHBOR_SPACING * rb
    atoms = []
    for k in range(1, n + 1):
        if k <= m:
            s = -(_LEG_GAP * rb + (m - k) * spacing)
        else:
            s = +(_LEG_GAP * rb + (k - m - 1) * spacing)
        if wire == "x":
            x, y = s, 0.0
        else:
            # y wire runs top to bottom: first leg at positive y.
            x, y = 0.0, -s
        role = "bulk"
        if k == 1:
            role = "boundary-initial"
        elif k == n:
            role = "boundary-final"
        atoms.append(Atom(f"{wire}{k}", x, y, role, wire))
    return atoms


def _single_wire_atoms(n: int, rb: float) -> list[Atom]:
    spacing = NEIGHBOR_SPACING * rb
    atoms = []
    for k in range(1, n + 1):
        role = "boundary-initial" if k == 1 else "boundary-final" if k == n else "bulk"
        atoms.append(Atom(f"x{k}", (k - 1) * spacing, 0.0, role, "x"))
    return atoms


def _logical_wire_bits(n: int, mu: int) -> list[int]:
    """Excited wire positions (1-based) of the logical state mu of one wire."""
    start = 1 if mu == 1 else 2
    return list(range(start, n + 1, 2))


def _finish(atoms: list[Atom], rb: float, c6: float, meta: dict,
            extra_pairs: set[tuple[int, int]] | None = None,
            mode: str = "unit-disk") -> AtomLayout:
    pos = np.array([(a.x_um, a.y_um) for a in atoms])
    pairs = unit_disk_pairs(pos, rb)
    if extra_pairs:
        pairs |= extra_pairs
    layout = AtomLayout(atoms=atoms, c6=c6, rb_um=rb,
                        adjacency=frozenset(pairs), adjacency_mode=mode, meta=meta)
    return layout.validate()


def build_vertex_wire(n: int, delta: float, eps_i: float = 0.0, eps_f: float = 0.0,
                      *, omega: float = 0.0, c6: float = DEFAULT_C6) -> AtomLayout:
    """A single nearest-neighbor-blockaded chain encoding one graph vertex.

    The two Z2-ordered logical states have Omega = 0 energies
    -delta*n/2 + eps_f (state 0) and -delta*n/2 + eps_i (state 1); the wire
    weight is their difference eps_f - eps_i.
    """
    if n % 2 or n < 2:
        raise ConfigError(f"wire length must be even and >= 2, got {n}")
    if delta - eps_i <= 0 or delta - eps_f <= 0:
        raise ConfigError("effective boundary detunings Delta - eps must stay positive")
    rb = blockade_radius(omega, delta, c6)
    atoms = _single_wire_atoms(n, rb)
    meta = {
        "kind": "single-wire", "n_x": n, "m_x": None,
        "weight": eps_f - eps_i,
        "logical_energies": {"0": -delta * n / 2 + eps_f, "1": -delta * n / 2 + eps_i},
        "logical_strings": {"0": [f"x{k}" for k in _logical_wire_bits(n, 0)],
                            "1": [f"x{k}" for k in _logical_wire_bits(n, 1)]},
    }
    return _finish(atoms, rb, c6, meta)


def _two_wire_atoms(spec: SetupSpec, rb: float) -> list[Atom]:
    return _wire_atoms("x", spec.n_x, spec.m_x, rb) + _wire_atoms("y", spec.n_y, spec.m_y, rb)


def _gadget_atom(name: str, role: str, sides: tuple[int, int], rb: float) -> Atom:
    sx, sy = _CORNER_XY[sides]
    h = _GADGET_HALF * rb
    return Atom(name, sx * h, sy * h, role, "none")


def _logical_strings_two_wire(spec: SetupSpec, gadget_of_sides) -> dict:
    """Map |mu_x mu_y> to the excited atom ids, gadget completion included."""
    strings = {}
    for mux in (0, 1):
        for muy in (0, 1):
            ids = [f"x{k}" for k in _logical_wire_bits(spec.n_x, mux)]
            ids += [f"y{k}" for k in _logical_wire_bits(spec.n_y, muy)]
            ids += gadget_of_sides(2 - mux, 2 - muy)
            strings[f"{mux}{muy}"] = ids
    return strings


def build_crossing(spec: SetupSpec, delta: float, delta_g: float | None = None,
                   *, omega: float = 0.0, c6: float = DEFAULT_C6) -> AtomLayout:
    """Two vertex wires intersecting via the four-atom crossing gadget.

    Each gadget atom q{s}{s'} blockades the s-side end of wire x and the
    s'-side end of wire y; all four blockade each other.  Every logical state
    then completes with exactly one gadget excitation, so the four logical
    strings are degenerate at equal boundary detunings.
    """
    if spec.kind != "crossing":
        raise ConfigError(f"expected a crossing spec, got kind {spec.kind!r}")
    if delta_g is None:
        delta_g = spec.gadget_ratio * delta
    rb = blockade_radius(omega, delta, c6)
    atoms = _two_wire_atoms(spec, rb)
    for s in (1, 2):
        for sp in (1, 2):
            atoms.append(_gadget_atom(f"q{s}{sp}", "crossing-gadget", (s, sp), rb))
    meta = {
        "kind": "crossing", "n_x": spec.n_x, "m_x": spec.m_x,
        "n_y": spec.n_y, "m_y": spec.m_y,
        "delta": delta, "delta_g": delta_g,
        "logical_strings": _logical_strings_two_wire(
            spec, lambda sx, sy: [f"q{sx}{sy}"]),
    }
    layout = _finish(atoms, rb, c6, meta)
    _check_gadget_pattern(layout, spec, crossing=True)
    return layout


def build_cwe(spec: SetupSpec, delta: float, delta_g: float | None = None,
              *, omega: float = 0.0, c6: float = DEFAULT_C6) -> AtomLayout:
    """Two vertex wires intersecting via the three-atom CWE gadget.

    The gadget is the crossing gadget with the corner serving both 1-logical
    orders removed: Gx keeps the x_m / y_{m+1} corner, Gy the y_m / x_{m+1}
    corner, and Gc the corner blockading both second legs.  Gc blockades both
    Gx and Gy; the joint 1-1 logical string needs Gx and Gy excited at once,
    which violates their mutual blockade, so |11> is forbidden.
    """
    if spec.kind != "cwe":
        raise ConfigError(f"expected a cwe spec, got kind {spec.kind!r}")
    if delta_g is None:
        delta_g = spec.gadget_ratio * delta
    rb = blockade_radius(omega, delta, c6)
    atoms = _two_wire_atoms(spec, rb)
    atoms.append(_gadget_atom("gx", "gadget-Gx", (1, 2), rb))
    atoms.append(_gadget_atom("gy", "gadget-Gy", (2, 1), rb))
    atoms.append(_gadget_atom("gc", "gadget-Gc", (2, 2), rb))
    gadget_of = {(2, 2): ["gc"], (1, 2): ["gx"], (2, 1): ["gy"], (1, 1): ["gx", "gy"]}
    meta = {
        "kind": "cwe", "n_x": spec.n_x, "m_x": spec.m_x,
        "n_y": spec.n_y, "m_y": spec.m_y,
        "delta": delta, "delta_g": delta_g,
        "logical_strings": _logical_strings_two_wire(
            spec, lambda sx, sy: gadget_of[(sx, sy)]),
    }
    layout = _finish(atoms, rb, c6, meta)
    _check_gadget_pattern(layout, spec, crossing=False)
    return layout


def _check_gadget_pattern(layout: AtomLayout, spec: SetupSpec, crossing: bool):
    """Assert the unit-disk adjacency realizes the intended gadget wiring."""
    adj = set(layout.adjacency)
    idx = layout.index

    def has(a, b):
        return tuple(sorted((idx(a), idx(b)))) in adj

    ends = {"x": (f"x{spec.m_x}", f"x{spec.m_x + 1}"),
            "y": (f"y{spec.m_y}", f"y{spec.m_y + 1}")}
    gadget = ([f"q{s}{sp}" for s in (1, 2) for sp in (1, 2)] if crossing
              else ["gx", "gy", "gc"])
    sides = ({g: (int(g[1]), int(g[2])) for g in gadget} if crossing
             else {"gx": (1, 2), "gy": (2, 1), "gc": (2, 2)})
    for g1 in gadget:
        for g2 in gadget:
            if g1 < g2 and not has(g1, g2):
                raise ConfigError(f"gadget atoms {g1}, {g2} must blockade each other")
    for g, (sx, sy) in sides.items():
        for wire, side in (("x", sx), ("y", sy)):
            want_end = ends[wire][side - 1]
            other_end = ends[wire][2 - side]
            if not has(g, want_end):
                raise ConfigError(f"{g} must blockade {want_end}")
            if has(g, other_end):
                raise ConfigError(f"{g} must not blockade {other_end}")
    for ex in ends["x"]:
        for ey in ends["y"]:
            if has(ex, ey):
                raise ConfigError(f"wire ends {ex}, {ey} must not blockade each other")


def extend_wires(spec: SetupSpec, d: int) -> SetupSpec:
    """Add 2*d atoms to the first leg of every wire.

    Each wire then hosts d more domain-wall states while the geometry behind
    the gadget is untouched.
    """
    if d < 0:
        raise ConfigError("extension must be >= 0")
    if d == 0:
        return spec
    kw = {"n_x": spec.n_x + 2 * d, "m_x": spec.m_x + 2 * d,
          "extension": spec.extension + d}
    if spec.kind != "single-wire":
        kw.update(n_y=spec.n_y + 2 * d, m_y=spec.m_y + 2 * d)
    return replace(spec, **kw)


def encode_weights(instance: MWISInstance, spec: SetupSpec,
                   delta0: float) -> dict[str, tuple[float, float]]:
    """Map vertex weights to boundary detunings (eps_i, eps_f) per wire.

    The split is centered at delta0/2, so weight delta gives
    ((delta0 - delta)/2, (delta0 + delta)/2) and eps_f - eps_i = delta.
    """
    wires = spec.wires
    if len(instance.vertices) > len(wires):
        raise ConfigError(
            f"instance has {len(instance.vertices)} vertices but the setup "
            f"provides {len(wires)} wires")
    out = {}
    for wire, vertex in zip(wires, instance.vertices):
        delta = instance.weight(vertex)
        out[wire] = ((delta0 - delta) / 2.0, (delta0 + delta) / 2.0)
    for wire in wires[len(instance.vertices):]:
        out[wire] = (delta0 / 2.0, delta0 / 2.0)
    return out


def blockade_graph(layout: AtomLayout, omega: float, delta: float) -> set[tuple[int, int]]:
    """Blockaded index pairs at drive (omega, delta): d < R_b(omega, delta)."""
    if omega == 0.0 and delta == 0.0:
        raise ConfigError("blockade radius undefined for Omega = Delta = 0")
    rb = blockade_radius(omega, delta, layout.c6)
    return unit_disk_pairs(layout.positions(), rb)


def build_ancilla_cwe(spec: SetupSpec, delta: float,
                      eps_a: float = 0.0, eps_b: float = 0.0,
                      omega_a: float = 0.0, omega_an: float = 0.0,
                      omega_b: float = 0.0, *, omega: float = 0.0,
                      c6: float = DEFAULT_C6) -> AtomLayout:
    """CWE gadget extended by six ancillae opening the nonlogical boundary.

    Per wire w the ancilla A_w (detuning Delta + eps_A) copies the boundary
    line of domain-wall states beyond the gadget, A_Nw (detuning Delta) is its
    blockaded negation partner, and B_w (detuning eps_B) copies the corner of
    that line.  The blockade constraints are declared explicitly; the minimal
    unit-disk realization of the modified gadget requires 17 atoms and its
    coordinates are configuration, not physics, so positions here are
    indicative.
    """
    if spec.kind != "cwe-ancilla":
        raise ConfigError(f"expected a cwe-ancilla spec, got kind {spec.kind!r}")
    base_spec = replace(spec, kind="cwe")
    base = build_cwe(base_spec, delta, spec.gadget_ratio * delta, omega=omega, c6=c6)
    rb = base.rb_um
    atoms = list(base.atoms)
    anc = [
        Atom("ax", 1.3 * rb, -0.75 * rb, "ancilla-A", "x"),
        Atom("anx", 1.75 * rb, -1.1 * rb, "ancilla-AN", "x"),
        Atom("bx", 2.2 * rb, -1.9 * rb, "ancilla-B", "x"),
        Atom("ay", -0.75 * rb, 1.3 * rb, "ancilla-A", "y"),
        Atom("any", -1.1 * rb, 1.75 * rb, "ancilla-AN", "y"),
        Atom("by", -1.9 * rb, 2.2 * rb, "ancilla-B", "y"),
    ]
    atoms += anc
    idx = {a.id: i for i, a in enumerate(atoms)}

    def pair(a, b):
        return tuple(sorted((idx[a], idx[b])))

    mx, my = spec.m_x, spec.m_y
    declared = {tuple(sorted(p)) for p in base.adjacency}
    # A_w is excitable only when wire w sits beyond the gadget (second-leg
    # wall at least two steps in) while the other wire's wall is parked right
    # before it; B_w additionally pins the wall to the first such position
    # and requires A_w excited (enforced through the negation partner A_Nw).
    constraints = [
        ("ax", ["anx", "gc", f"y{my}", f"y{my + 1}", f"x{mx + 2}"]),
        ("bx", ["anx", "gc", f"y{my}", f"y{my + 1}", f"x{mx + 2}", f"x{mx + 3}"]),
        ("anx", ["ax", "bx"]),
        ("ay", ["any", "gc", f"x{mx}", f"x{mx + 1}", f"y{my + 2}"]),
        ("by", ["any", "gc", f"x{mx}", f"x{mx + 1}", f"y{my + 2}", f"y{my + 3}"]),
        ("any", ["ay", "by"]),
    ]
    for a, partners in constraints:
        for b in partners:
            declared.add(pair(a, b))
    meta = dict(base.meta)
    # the negation ancillae are excited in every low-energy state
    meta["logical_strings"] = {k: v + ["anx", "any"]
                               for k, v in base.meta["logical_strings"].items()}
    meta.update(kind="cwe-ancilla", eps_a=eps_a, eps_b=eps_b,
                omega_a=omega_a, omega_an=omega_an, omega_b=omega_b,
                min_gadget_atoms=17)
    layout = AtomLayout(atoms=atoms, c6=c6, rb_um=rb,
                        adjacency=frozenset(declared),
                        adjacency_mode="declared", meta=meta)
    return layout.validate()
