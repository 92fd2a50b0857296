"""
Least-squares power-law fits in log-log coordinates.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from config import LAB_CONFIG
from libs.exceptions import DataError, ParameterError
from libs.moments.models import MomentEstimate

logger = logging.getLogger(__name__)


def fit_power_law(T, values, min_points: Optional[int] = None,
                  min_decades: float = 1.0) -> Tuple[float, float, float]:
    """Fit log values = slope·log T + intercept.

    Returns:
        (slope, intercept, residual_rms) with the residual in natural-log units
    """
    min_points = LAB_CONFIG["moments"]["min_fit_points"] if min_points is None else min_points
    T = np.asarray(T, dtype=float)
    values = np.asarray(values, dtype=float)
    if T.shape != values.shape or T.ndim != 1:
        raise ParameterError("fit needs two equal-length one-dimensional arrays")
    if T.size < min_points:
        raise ParameterError(f"fit needs at least {min_points} points, got {T.size}")
    if np.any(np.diff(T) <= 0) or T[0] <= 0:
        raise ParameterError("fit abscissae must be positive and strictly increasing")
    if math.log10(T[-1] / T[0]) < min_decades - 1e-12:
        raise ParameterError(f"fit points span {math.log10(T[-1] / T[0]):.2f} decades, need {min_decades}")
    if np.any(values <= 0):
        raise DataError("nonpositive value in a log-log fit (integration bug or odd-power sign change)")

    x = np.log(T)
    y = np.log(values)
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    return float(slope), float(intercept), float(np.sqrt(np.mean(residual ** 2)))


def positive_tail(T, values) -> Tuple[np.ndarray, np.ndarray]:
    """Samples after the last nonpositive value."""
    T = np.asarray(T, dtype=float)
    values = np.asarray(values, dtype=float)
    nonpositive = np.flatnonzero(values <= 0)
    start = int(nonpositive[-1]) + 1 if nonpositive.size else 0
    return T[start:], values[start:]


def fit_exponent(estimate: MomentEstimate) -> Tuple[float, float, float]:
    """Fit an estimate's samples and store the result on it.

    Signed odd powers fit only their positive tail, which must still span a decade.
    """
    T, values = estimate.T, estimate.integrals
    if estimate.power % 2 == 1 and not estimate.absolute:
        T, values = positive_tail(T, values)
        if T.size < estimate.T.size:
            logger.info(f"{estimate.label}: integral nonpositive up to T={estimate.T[-T.size - 1]:g}, "
                        f"fitting {T.size} of {estimate.T.size} samples")
        if T.size < 2 or math.log10(T[-1] / T[0]) < 1.0 - 1e-12:
            raise DataError(f"{estimate.label}: integral is not positive over a full decade of T")
    slope, intercept, rms = fit_power_law(T, values)
    estimate.fit_start = float(T[0])
    estimate.fitted_slope = slope
    estimate.fitted_intercept = intercept
    estimate.residual_rms = rms
    logger.info(f"Fitted {estimate.label}: slope={slope:.4f}, intercept={intercept:.4f}, rms={rms:.2e}")
    return slope, intercept, rms
