"""
Unit-interval maxima of |ζ(½+it)| on [T, 2T] and their dyadic large-value classes.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy import optimize

from config import LAB_CONFIG
from libs.exceptions import CoverageError
from libs.short_interval.models import DyadicClass, DyadicReport
from libs.zeta.riemann_siegel import abs_squared
from libs.zeta.sample_grid import ZetaSampleGrid

logger = logging.getLogger(__name__)


def unit_interval_maxima(T: float, grid: ZetaSampleGrid,
                         refine: Optional[bool] = None) -> Tuple[np.ndarray, np.ndarray]:
    """τ_r* and |ζ(½+iτ_r*)| for r = 1..⌊T⌋, maximum over [T+r-1, T+r].

    Grid maxima by default; with refine the maximum is polished by a bounded scalar
    search around the grid maximum.
    """
    cfg = LAB_CONFIG["short_interval"]
    refine = cfg["refine_maxima"] if refine is None else refine
    if grid.step > cfg["dyadic_max_step"]:
        raise CoverageError(f"grid step {grid.step} exceeds {cfg['dyadic_max_step']} for maxima")
    windows = int(math.floor(T))
    grid.require(T, T + windows, "unit-interval maxima")

    times = grid.times
    first = int(np.searchsorted(times, T - 1e-12, side="left"))
    last = int(np.searchsorted(times, T + windows + 1e-12, side="right"))
    local_t = times[first:last]
    local_v = grid.values[first:last]
    slot = np.clip(np.floor(local_t - T).astype(np.int64), 0, windows - 1)

    best_t = np.empty(windows)
    best_v = np.full(windows, -1.0)
    starts = np.searchsorted(slot, np.arange(windows), side="left")
    ends = np.searchsorted(slot, np.arange(windows), side="right")
    for r in range(windows):
        if ends[r] <= starts[r]:
            raise CoverageError(f"no grid samples in unit interval {r + 1}")
        j = starts[r] + int(np.argmax(local_v[starts[r]:ends[r]]))
        best_t[r] = local_t[j]
        best_v[r] = local_v[j]

    if refine:
        def negative(t: float) -> float:
            return -float(abs_squared(np.array([t]), grid.rs_order)[0])

        for r in range(windows):
            lo = max(T + r, best_t[r] - grid.step)
            hi = min(T + r + 1, best_t[r] + grid.step)
            if hi <= lo:
                continue
            result = optimize.minimize_scalar(negative, bounds=(lo, hi), method="bounded")
            if -result.fun > best_v[r]:
                best_t[r], best_v[r] = float(result.x), float(-result.fun)
    return best_t, np.sqrt(best_v)


def dyadic_classes(T: float, grid: ZetaSampleGrid, refine: Optional[bool] = None,
                   epsilon0: Optional[float] = None) -> DyadicReport:
    """Classify unit-interval maxima with |ζ| >= log T into [V, 2V), V a power of two.

    V starts at 2^{⌊log₂ log T⌋}, so the classes partition every maximum at or above
    log T; the rest are counted as below.
    """
    eps = LAB_CONFIG["short_interval"]["epsilon0"] if epsilon0 is None else epsilon0
    times, values = unit_interval_maxima(T, grid, refine)
    threshold = math.log(T)
    above = values >= threshold
    report = DyadicReport(T=T, threshold=threshold, window_count=int(values.size),
                          below=int(np.count_nonzero(~above)))
    if not np.any(above):
        return report
    V = 2.0 ** math.floor(math.log2(threshold))
    top = float(values[above].max())
    while V <= top:
        members = above & (values >= V) & (values < 2 * V)
        report.classes.append(DyadicClass(V=V, members=times[members], values=values[members],
                                          T=T, epsilon0=eps))
        V *= 2.0
    logger.info(f"Dyadic classes at T={T}: " + ", ".join(f"V={c.V:g}:{c.R_V}" for c in report.classes))
    return report


def maxima_twelfth_bound(T: float, grid: ZetaSampleGrid, refine: Optional[bool] = None) -> dict:
    """∫_T^{T+⌊T⌋}|ζ|¹² against Σ_r |ζ(½+iτ_r*)|¹²."""
    _, values = unit_interval_maxima(T, grid, refine)
    windows = values.size
    integral = grid.integral(T, T + windows, power=6)
    bound = math.fsum(values ** 12)
    return {"T": T, "integral": integral, "maxima_sum": bound, "ratio": integral / bound}
