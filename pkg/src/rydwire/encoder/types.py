"""Problem instances and parametric setup descriptions."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from rydwire.errors import ConfigError

KINDS = ("single-wire", "crossing", "cwe", "cwe-ancilla")
CONFIG_LABELS = ("a", "b", "c", "d", "custom")


@dataclass(frozen=True)
class MWISInstance:
    """A maximum weighted independent set instance.

    Vertices carry positive weights (rad/us); the edge penalty ``u`` is
    conceptual since the blockade limit realizes u -> infinity.
    """

    vertices: tuple[str, ...]
    weights: dict[str, float] = field(default_factory=dict)
    edges: frozenset[frozenset[str]] = frozenset()
    penalty_u: float = float("inf")

    def __post_init__(self):
        for v in self.vertices:
            if self.weights.get(v, 1.0) <= 0.0:
                raise ConfigError(f"vertex weight for {v!r} must be positive")
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise ConfigError(f"edge {pair} is not a pair (self-loops forbidden)")
            if any(v not in self.vertices for v in pair):
                raise ConfigError(f"edge {pair} references unknown vertex")

    def weight(self, v: str) -> float:
        return self.weights.get(v, 1.0)

    def objective(self, chosen: set[str]) -> float:
        """Cost-function value (to minimize) of a vertex selection."""
        val = -sum(self.weight(v) for v in chosen)
        for e in self.edges:
            if e <= chosen:
                val += self.penalty_u
        return val


@dataclass(frozen=True)
class SetupSpec:
    """Parametric description of a two-wire building block.

    ``n_x``/``n_y`` count the atoms of each vertex wire, ``m_x``/``m_y`` the
    atoms of the first leg (before the gadget).  All four are even.  The
    extension ``d`` records how many pairs of atoms were added to each first
    leg relative to the underlying configuration.
    """

    kind: str
    n_x: int
    m_x: int
    n_y: int | None = None
    m_y: int | None = None
    extension: int = 0
    gadget_ratio: float = 1.0
    config_label: str = "custom"
    boundary_c: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown setup kind {self.kind!r}")
        if self.config_label not in CONFIG_LABELS:
            raise ConfigError(f"unknown config label {self.config_label!r}")
        if self.gadget_ratio < 0.0:
            raise ConfigError("gadget detuning ratio must be >= 0")
        if self.extension < 0:
            raise ConfigError("wire extension must be >= 0")
        self._check_wire("x", self.n_x, self.m_x)
        if self.kind == "single-wire":
            if self.n_y is not None or self.m_y is not None:
                raise ConfigError("single-wire setups carry no y-wire fields")
        else:
            if self.n_y is None or self.m_y is None:
                raise ConfigError(f"{self.kind} setups need n_y and m_y")
            self._check_wire("y", self.n_y, self.m_y)

    @staticmethod
    def _check_wire(tag: str, n: int, m: int):
        if n % 2 or m % 2:
            raise ConfigError(f"wire {tag}: atom counts must be even (n={n}, m={m})")
        if not 0 < m < n:
            raise ConfigError(f"wire {tag}: need 0 < m < n (n={n}, m={m})")

    @property
    def wires(self) -> tuple[str, ...]:
        return ("x",) if self.kind == "single-wire" else ("x", "y")

    def n(self, wire: str) -> int:
        return self.n_x if wire == "x" else self.n_y

    def m(self, wire: str) -> int:
        return self.m_x if wire == "x" else self.m_y

    def zeta(self, wire: str) -> int:
        """Last domain-wall position before the gadget: m/2 + 1."""
        return self.m(wire) // 2 + 1

    def swapped(self) -> "SetupSpec":
        """The x <-> y mirrored spec."""
        if self.kind == "single-wire":
            return self
        return replace(self, n_x=self.n_y, m_x=self.m_y, n_y=self.n_x, m_y=self.m_x)


def spec_from_config(label: str, n: int, kind: str = "cwe", c: int = 4,
                     gadget_ratio: float = 1.0) -> SetupSpec:
    """Build the standard geometrical configurations (a)-(d).

    (a) gadget at the midpoint of both wires, (b) midpoint of x and close to
    the beginning of y, (c) close to the beginning of both, (d) close to the
    end of both.  ``c`` is the short-leg atom count for labels b-d.
    """
    if label == "a":
        m_x = m_y = n // 2
    elif label == "b":
        m_x, m_y = n // 2, c
    elif label == "c":
        m_x = m_y = c
    elif label == "d":
        m_x = m_y = n - c
    else:
        raise ConfigError(f"config label must be one of a-d, got {label!r}")
    return SetupSpec(kind=kind, n_x=n, m_x=m_x, n_y=n, m_y=m_y,
                     gadget_ratio=gadget_ratio, config_label=label,
                     boundary_c=c if label != "a" else None)
