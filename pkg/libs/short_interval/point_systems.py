"""
Generators of admissible point systems t_1 < … < t_R in (T, 2T] with spacing >= 5G.

Windows [t_r - G, t_r + G] are kept inside [T, 2T].
"""

import bisect
import logging
import math
from typing import Optional

import numpy as np

from config import LAB_CONFIG
from libs.exceptions import ParameterError
from libs.short_interval.models import PointSystem
from libs.zeta.sample_grid import ZetaSampleGrid

logger = logging.getLogger(__name__)


def max_points(T: float, G: float) -> int:
    """Largest R with t_1 = T + G, spacing 5G and t_R <= 2T - G."""
    span = T - 2.0 * G
    if span < 0:
        raise ParameterError(f"G={G} is too wide for the block (T, 2T] at T={T}")
    return int(math.floor(span / (5.0 * G) + 1e-12)) + 1


def uniform_packing(T: float, G: float) -> PointSystem:
    """Maximal packing t_r = T + G + 5G(r-1)."""
    R = max_points(T, G)
    points = T + G + 5.0 * G * np.arange(R)
    return PointSystem(T=T, G=G, points=points, generator="uniform")


def random_admissible(T: float, G: float, seed: Optional[int] = None,
                      R: Optional[int] = None) -> PointSystem:
    """R points (default half the maximal packing) with random admissible gaps.

    The free length beyond the mandatory 5G spacings is split at R sorted uniform cuts.
    """
    seed = LAB_CONFIG["cli"]["seed"] if seed is None else seed
    R_max = max_points(T, G)
    R = max(R_max // 2, 1) if R is None else R
    if not 1 <= R <= R_max:
        raise ParameterError(f"R={R} outside [1, {R_max}] for T={T}, G={G}")
    slack = (T - 2.0 * G) - 5.0 * G * (R - 1)
    rng = np.random.default_rng(seed)
    cuts = np.sort(rng.uniform(0.0, slack, R))
    points = T + G + cuts + 5.0 * G * np.arange(R)
    return PointSystem(T=T, G=G, points=points, generator="random")


def greedy_peaks(T: float, G: float, grid: ZetaSampleGrid) -> PointSystem:
    """Local maxima of |ζ|² taken in decreasing order, skipping any within 5G of a chosen one."""
    low, high = T + G, 2.0 * T - G
    grid.require(low, high, "peak selection")
    times = grid.times
    values = grid.values
    inside = np.flatnonzero((times >= low) & (times <= high))
    if inside.size < 3:
        raise ParameterError(f"too few grid samples in [{low}, {high}]")
    idx = inside[1:-1]
    peaks = idx[(values[idx] >= values[idx - 1]) & (values[idx] > values[idx + 1])]
    order = peaks[np.argsort(-values[peaks], kind="stable")]

    chosen = []
    spacing = 5.0 * G
    for i in order:
        t = float(times[i])
        pos = bisect.bisect_left(chosen, t)
        if pos > 0 and t - chosen[pos - 1] < spacing:
            continue
        if pos < len(chosen) and chosen[pos] - t < spacing:
            continue
        chosen.insert(pos, t)
    logger.info(f"Greedy peak system at T={T}, G={G:.4g}: {len(chosen)} of {peaks.size} peaks")
    return PointSystem(T=T, G=G, points=np.array(chosen), generator="greedy-peaks")


def select_G(T: float, strategy: str = "quarter-power", V: Optional[float] = None,
             epsilon0: Optional[float] = None) -> float:
    """Window width by strategy.

    quarter-power: G = T^{1/4}
    large-values:  G = V² T^{-2ε}, raised to T^{0.2+ε} when smaller
    """
    eps = LAB_CONFIG["short_interval"]["epsilon0"] if epsilon0 is None else epsilon0
    if strategy == "quarter-power":
        return T ** 0.25
    if strategy == "large-values":
        if V is None or V <= 0:
            raise ParameterError("the large-values strategy needs V > 0")
        return min(max(V * V * T ** (-2.0 * eps), T ** (0.2 + eps)), T)
    raise ParameterError(f"unknown G strategy '{strategy}'")


GENERATORS = ("uniform", "random", "greedy-peaks")


def build_system(name: str, T: float, G: float, grid: Optional[ZetaSampleGrid] = None,
                 seed: Optional[int] = None) -> PointSystem:
    """Dispatch to one of the built-in generators."""
    if name == "uniform":
        return uniform_packing(T, G)
    if name == "random":
        return random_admissible(T, G, seed)
    if name == "greedy-peaks":
        if grid is None:
            raise ParameterError("greedy-peaks needs a zeta grid")
        return greedy_peaks(T, G, grid)
    raise ParameterError(f"unknown point-system generator '{name}'")
