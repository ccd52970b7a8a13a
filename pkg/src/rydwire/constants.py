"""Physical constants and hardware-style defaults.

Lengths are in micrometers, energies and rates in rad/us throughout the
package.
"""

import numpy as np

# Van der Waals coefficient of the Aquila-class hardware, um^6 * rad/us.
DEFAULT_C6 = 5.42e6

# Minimum allowed distance between any two trapped atoms, um.
MIN_ATOM_DISTANCE_UM = 4.0

# Hardware-style drive defaults: Omega = Delta / 3 = 7.5 rad/us.
DEFAULT_OMEGA = 7.5
DEFAULT_DELTA = 22.5

# Wire spacing conventions, in units of the blockade radius.  Neighbors on a
# wire sit inside the radius, second neighbors outside it with margin so the
# adjacency stays unambiguous once interaction tails are switched on.
NEIGHBOR_SPACING = 0.9
SECOND_NEIGHBOR_MIN = 1.2


def blockade_radius(omega: float, delta: float, c6: float = DEFAULT_C6) -> float:
    """Blockade radius R_b = (C6 / sqrt((2*Omega)^2 + Delta^2))^(1/6) in um."""
    denom = np.hypot(2.0 * omega, delta)
    if denom == 0.0:
        raise ZeroDivisionError("blockade radius undefined for Omega = Delta = 0")
    return float((c6 / denom) ** (1.0 / 6.0))
