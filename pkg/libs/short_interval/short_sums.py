"""
Short-interval mean squares over separated points and their fourth-power sums.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from config import LAB_CONFIG
from libs.exceptions import ParameterError
from libs.moments.exponent_fit import fit_power_law
from libs.short_interval.models import PointSystem, Theorem2Report
from libs.zeta.sample_grid import ZetaSampleGrid

logger = logging.getLogger(__name__)


def short_integral(t_r: float, G: float, grid: ZetaSampleGrid) -> float:
    """∫_{t_r-G}^{t_r+G} |ζ(½+it)|² dt."""
    if G < 0:
        raise ParameterError(f"window half-width must be nonnegative, got {G}")
    if G == 0:
        return 0.0
    return max(grid.integral(t_r - G, t_r + G), 0.0)


def short_integrals(system: PointSystem, grid: ZetaSampleGrid) -> np.ndarray:
    """Short integrals at every point of the system."""
    grid.require(float(system.points[0]) - system.G, float(system.points[-1]) + system.G, "short windows")
    lows = grid.cumulative_at(system.points - system.G)
    highs = grid.cumulative_at(system.points + system.G)
    return np.maximum(highs - lows, 0.0)


def theorem2_sum(system: PointSystem, grid: ZetaSampleGrid, epsilon0: Optional[float] = None,
                 constant: Optional[float] = None) -> Theorem2Report:
    """Σ_r (short integral)⁴ against T^{2+ε}G^{-2} + R G⁴ T^ε."""
    cfg = LAB_CONFIG["short_interval"]
    eps = cfg["epsilon0"] if epsilon0 is None else epsilon0
    constant = cfg["theorem2_constant"] if constant is None else constant
    values = short_integrals(system, grid)
    total = math.fsum(values ** 4)
    T, G = system.T, system.G
    envelope = T ** (2 + eps) / G ** 2 + system.R * G ** 4 * T ** eps
    report = Theorem2Report(T=T, G=G, R=system.R, generator=system.generator,
                            total=total, envelope=envelope, constant=constant)
    logger.info(f"Short sums T={T} G={G:.4g} R={system.R} ({system.generator}): ratio={report.ratio:.4g}")
    return report


def ratio_trend(reports: Sequence[Theorem2Report], normalized: bool = False) -> Dict[str, float]:
    """Log-log slope of the ratio (or the log⁴-normalised ratio) against T for one generator."""
    reports = sorted(reports, key=lambda r: r.T)
    T = [r.T for r in reports]
    ratios = [r.log_normalized_ratio if normalized else r.ratio for r in reports]
    slope, intercept, rms = fit_power_law(T, ratios, min_points=2, min_decades=0.0)
    limit = LAB_CONFIG["short_interval"]["trend_slope_max"]
    return {"slope": slope, "intercept": intercept, "residual_rms": rms,
            "limit": limit, "pass": slope <= limit}


def twelfth_moment(T: float, grid: ZetaSampleGrid, epsilon0: Optional[float] = None) -> Dict[str, float]:
    """∫₀ᵀ |ζ(½+it)|¹² dt and its size relative to T^{2+ε}."""
    eps = LAB_CONFIG["short_interval"]["epsilon0"] if epsilon0 is None else epsilon0
    if T <= 0:
        raise ParameterError(f"T must be positive, got {T}")
    value = grid.integral(0.0, T, power=6)
    return {"T": T, "integral": value, "normalized": value / T ** (2 + eps)}


def twelfth_scan(Ts: Sequence[float], grid: ZetaSampleGrid) -> Dict[str, object]:
    """Twelfth moments at several T and the fitted exponent."""
    rows: List[Dict[str, float]] = [twelfth_moment(float(T), grid) for T in sorted(Ts)]
    slope, intercept, rms = fit_power_law([r["T"] for r in rows], [r["integral"] for r in rows],
                                          min_points=2, min_decades=0.0)
    limit = LAB_CONFIG["short_interval"]["twelfth_slope_max"]
    return {"rows": rows, "slope": slope, "intercept": intercept, "residual_rms": rms,
            "limit": limit, "pass": slope <= limit}


def holder_chain(T: float, grid: ZetaSampleGrid) -> Dict[str, float]:
    """∫|ζ|² , ∫|ζ|⁴, ∫|ζ|¹² on [0, T] and the two power-mean lower bounds."""
    second = grid.integral(0.0, T, power=1)
    fourth = grid.integral(0.0, T, power=2)
    twelfth = grid.integral(0.0, T, power=6)
    return {
        "second": second,
        "fourth": fourth,
        "twelfth": twelfth,
        "fourth_lower": second ** 2 / T,
        "twelfth_lower": fourth ** 3 / T ** 2,
        "twelfth_from_second": second ** 6 / T ** 5,
    }
