"""Gap-scaling classification and finite-size-scaling collapse."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from rydwire.errors import ConfigError, NumericalError


@dataclass
class ScalingFit:
    model: str                    # "power" | "exponential"
    exponent_or_rate: float       # z for power, alpha for exponential
    amplitude: float
    r2_power: float
    r2_exp: float
    classified: bool              # best transformed-axis R^2 above threshold


def _linfit(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    return slope, intercept, r2


def fit_gap_scaling(sizes, gaps, r2_threshold: float = 0.98) -> ScalingFit:
    """Competing fits log-log (power L^-z) vs lin-log (exponential e^-aL)."""
    sizes = np.asarray(sizes, dtype=float)
    gaps = np.asarray(gaps, dtype=float)
    if sizes.size < 4:
        raise ConfigError("need at least 4 sizes to classify a scaling law")
    if np.any(gaps <= 0):
        raise NumericalError("gaps must be positive for scaling fits")
    if np.allclose(gaps, gaps[0]):
        raise NumericalError("all gaps equal; scaling fit is ill-conditioned")
    logg = np.log(gaps)
    sp, ip, r2p = _linfit(np.log(sizes), logg)
    se, ie, r2e = _linfit(sizes, logg)
    if r2p >= r2e:
        return ScalingFit("power", -sp, float(np.exp(ip)), r2p, r2e,
                          r2p >= r2_threshold)
    return ScalingFit("exponential", -se, float(np.exp(ie)), r2p, r2e,
                      r2e >= r2_threshold)


# -- finite-size-scaling collapse --------------------------------------------

def fss_gap_ansatz(sizes, lams, z: float, nu: float, lam_c: float,
                   shape=lambda x: np.sqrt(1.0 + x ** 2)) -> np.ndarray:
    """Synthetic gap data delta_E = L^-z f(L^(1/nu) (lam - lam_c))."""
    sizes = np.asarray(sizes, dtype=float)[:, None]
    lams = np.asarray(lams, dtype=float)[None, :]
    return sizes ** (-z) * shape(sizes ** (1.0 / nu) * (lams - lam_c))


def _collapse_quality(params, sizes, lams, log_gaps) -> float:
    z, nu, lam_c = params
    if nu <= 0.05:
        return 1e6
    xs, ys, labels = [], [], []
    for i, size in enumerate(sizes):
        x = size ** (1.0 / nu) * (lams[i] - lam_c)
        y = log_gaps[i] + z * np.log(size)
        xs.append(x)
        ys.append(y)
        labels.append(np.full(x.size, i))
    xs = np.concatenate(xs)
    ys = np.concatenate(ys)
    labels = np.concatenate(labels)
    total = 0.0
    count = 0
    for i in range(len(sizes)):
        ref = labels != i
        if not np.any(ref):
            continue
        order = np.argsort(xs[ref])
        xr, yr = xs[ref][order], ys[ref][order]
        here = labels == i
        inside = (xs[here] >= xr[0]) & (xs[here] <= xr[-1])
        if not np.any(inside):
            continue
        pred = np.interp(xs[here][inside], xr, yr)
        total += float(np.sum((ys[here][inside] - pred) ** 2))
        count += int(np.sum(inside))
    return total / max(count, 1)


def fit_fss_collapse(sizes, lams, gaps,
                     z_bounds=(0.3, 2.5), nu_bounds=(0.4, 2.5),
                     lam_c_bounds=(1.0, 1.8),
                     n_starts: int = 6, seed: int = 11) -> tuple[float, float, float, float]:
    """Best (z, nu, lam_c) collapsing gap(L, lam) onto one master curve.

    ``lams`` and ``gaps`` are per-size arrays.  The quality function measures
    the spread of log(gap * L^z) against L^(1/nu) (lam - lam_c) across sizes;
    it is minimized from several deterministic starts.
    """
    sizes = [float(s) for s in sizes]
    lams = [np.asarray(l, dtype=float) for l in lams]
    log_gaps = [np.log(np.asarray(g, dtype=float)) for g in gaps]
    rng = np.random.default_rng(seed)
    best = None
    starts = [((z_bounds[0] + z_bounds[1]) / 2, 1.0,
               (lam_c_bounds[0] + lam_c_bounds[1]) / 2)]
    for _ in range(n_starts - 1):
        starts.append((rng.uniform(*z_bounds), rng.uniform(*nu_bounds),
                       rng.uniform(*lam_c_bounds)))
    for start in starts:
        res = minimize(_collapse_quality, start,
                       args=(sizes, lams, log_gaps),
                       method="Nelder-Mead",
                       options={"xatol": 1e-6, "fatol": 1e-12, "maxiter": 4000})
        z, nu, lam_c = res.x
        ok = (z_bounds[0] <= z <= z_bounds[1]
              and nu_bounds[0] <= nu <= nu_bounds[1]
              and lam_c_bounds[0] <= lam_c <= lam_c_bounds[1])
        if ok and (best is None or res.fun < best[3]):
            best = (float(z), float(nu), float(lam_c), float(res.fun))
    if best is None:
        raise NumericalError("finite-size-scaling collapse did not converge")
    return best
