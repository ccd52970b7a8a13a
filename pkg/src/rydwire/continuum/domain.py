"""L-shaped domain description and spectrum containers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from rydwire.errors import ConfigError


@dataclass(frozen=True)
class LShapeDomain:
    """Two perpendicular leads of widths zeta1, zeta2 and length ``length``.

    The domain is {(x, y) in [0, length]^2 : x <= zeta1 or y <= zeta2}; the
    re-entrant corner sits at (zeta1, zeta2).  ``bend_p`` in [0, 1) selects
    the bent generalizations used by the conformal solvers (1/2 is the right
    angle); ``normalization`` records which width convention the numbers are
    quoted in.
    """

    zeta1: float = 1.0
    zeta2: float = 1.0
    length: float = 40.0
    bend_p: float = 0.5
    normalization: str = "zeta1"   # "zeta1" (zeta1 = 1) or "product" (z1*z2 = 1)

    def __post_init__(self):
        if self.zeta1 <= 0 or self.zeta2 <= 0:
            raise ConfigError("lead widths must be positive")
        if self.length < max(self.zeta1, self.zeta2):
            raise ConfigError("lead length must be at least the widths")
        if not 0.0 <= self.bend_p < 1.0:
            raise ConfigError("bend parameter must lie in [0, 1)")
        if self.normalization not in ("zeta1", "product"):
            raise ConfigError("normalization must be 'zeta1' or 'product'")

    @property
    def r_zeta(self) -> float:
        return self.zeta2 / self.zeta1

    @property
    def k_threshold(self) -> float:
        """Propagation threshold: below it modes decay along both leads."""
        return min(np.pi / self.zeta1, np.pi / self.zeta2)


@dataclass
class ContinuumSpectrum:
    k_squared: np.ndarray
    k_threshold_squared: float
    meta: dict = field(default_factory=dict)

    @property
    def classification(self) -> list[str]:
        return ["bound" if k2 < self.k_threshold_squared else "propagating"
                for k2 in self.k_squared]

    @property
    def ground(self) -> float:
        return float(self.k_squared[0])
