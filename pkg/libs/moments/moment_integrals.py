"""
Power-moment integrals of Δ, Δ*, E and E*, and the suite that fits their exponents.

Δ-family integrals run from 1 and use midpoint sums on subintervals of length
1/points_per_unit; every jump of Δ (integers) and Δ* (quarter integers) lies on a
subinterval boundary. E-family integrals run from 0 on the shared zeta grid.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import integrate

from config import LAB_CONFIG
from libs.divisor.divisor_table import delta_star_values, delta_values, divisor_square_series
from libs.exceptions import DataError, ParameterError
from libs.moments.exponent_fit import fit_exponent, fit_power_law
from libs.moments.models import MomentCheck, MomentEstimate, MomentSuite, Quantity

logger = logging.getLogger(__name__)


def t_points(t_max: float, t_min: Optional[float] = None, ratio: Optional[float] = None) -> np.ndarray:
    """Geometric T-sample points t_min·ratio^j, closed with t_max."""
    cfg = LAB_CONFIG["moments"]
    t_min = cfg["t_min"] if t_min is None else t_min
    ratio = cfg["t_ratio"] if ratio is None else ratio
    if not 0 < t_min < t_max or ratio <= 1:
        raise ParameterError(f"need 0 < t_min < t_max and ratio > 1, got {t_min}, {t_max}, {ratio}")
    count = int(math.floor(math.log(t_max / t_min) / math.log(ratio) + 1e-9)) + 1
    points = t_min * ratio ** np.arange(count)
    if points[-1] < t_max * (1 - 1e-9):
        points = np.append(points, t_max)
    return points


def _power(values: np.ndarray, k: int, absolute: bool) -> np.ndarray:
    return np.abs(values) ** k if absolute else values ** k


def divisor_family_cumulative(quantity: Quantity, k: int, x_max: float, resources,
                              points_per_unit: Optional[int] = None,
                              absolute: bool = False):
    """Nodes 1 + j·h and ∫₁^{node} quantity^k by the midpoint rule."""
    points_per_unit = points_per_unit or LAB_CONFIG["moments"]["delta_points_per_unit"]
    h = 1.0 / points_per_unit
    cells = int(math.ceil((x_max - 1.0) / h))
    mids = 1.0 + (np.arange(cells) + 0.5) * h
    if quantity is Quantity.DELTA:
        table = resources.divisor_table(int(math.floor(x_max)) + 1)
        values = delta_values(mids, table)
    elif quantity is Quantity.DELTA_STAR:
        table = resources.divisor_table(int(math.floor(4.0 * x_max)) + 1)
        values = delta_star_values(mids, table)
    else:
        raise ParameterError(f"{quantity.value} is not a divisor-family quantity")
    nodes = 1.0 + h * np.arange(cells + 1)
    cumulative = np.concatenate(([0.0], np.cumsum(h * _power(values, k, absolute))))
    return nodes, cumulative


def zeta_family_cumulative(quantity: Quantity, k: int, t_max: float, resources,
                           absolute: bool = False):
    """Grid times and ∫₀^{t} quantity^k by cumulative Simpson on the zeta grid."""
    grid = resources.zeta_grid(t_max)
    if quantity is Quantity.E:
        values = grid.e_on_grid()
    elif quantity is Quantity.E_STAR:
        table = resources.divisor_table(int(math.floor(4.0 * grid.t_end / (2.0 * math.pi))) + 2)
        values = grid.e_star_on_grid(table)
    else:
        raise ParameterError(f"{quantity.value} is not a zeta-family quantity")
    cumulative = integrate.cumulative_simpson(_power(values, k, absolute), dx=grid.step, initial=0.0)
    return grid.times, cumulative


def moment_integrals(quantity: Quantity, k: int, Ts: Sequence[float], resources,
                     absolute: bool = False, points_per_unit: Optional[int] = None) -> np.ndarray:
    """∫ quantity^k up to each T (from 1 for Δ, Δ*; from 0 for E, E*)."""
    if k < 1:
        raise ParameterError(f"moment power must be >= 1, got {k}")
    Ts = np.asarray(Ts, dtype=float)
    t_max = float(Ts.max())
    if quantity.is_divisor_family:
        if Ts.min() < 1:
            raise ParameterError("divisor-family moments start at x = 1")
        nodes, cumulative = divisor_family_cumulative(quantity, k, t_max, resources,
                                                      points_per_unit, absolute)
    else:
        if Ts.min() < 0:
            raise ParameterError("zeta-family moments need T >= 0")
        nodes, cumulative = zeta_family_cumulative(quantity, k, t_max, resources, absolute)
    return np.interp(Ts, nodes, cumulative)


def moment_integral(quantity: Quantity, k: int, T: float, resources, absolute: bool = False) -> float:
    """∫ quantity^k up to T."""
    return float(moment_integrals(quantity, k, [T], resources, absolute)[0])


def default_t_min(quantity: Quantity, t_max: float) -> float:
    """Δ, Δ* sample only their upper decades; E, E* start at the configured t_min."""
    cfg = LAB_CONFIG["moments"]
    if quantity.is_divisor_family:
        return max(cfg["t_min"], t_max / 10.0 ** cfg["delta_fit_decades"])
    return cfg["t_min"]


def moment_estimate(quantity: Quantity, k: int, t_max: float, resources,
                    t_min: Optional[float] = None, ratio: Optional[float] = None,
                    absolute: bool = False, fit: bool = True) -> MomentEstimate:
    """Integrals at geometric T points and, optionally, their log-log fit."""
    Ts = t_points(t_max, default_t_min(quantity, t_max) if t_min is None else t_min, ratio)
    estimate = MomentEstimate(quantity=quantity, power=k, T=Ts,
                              integrals=moment_integrals(quantity, k, Ts, resources, absolute),
                              absolute=absolute)
    if fit:
        fit_exponent(estimate)
    return estimate


def mean_square_constants(resources, series_limit: Optional[int] = None) -> Dict[str, float]:
    """(6π²)⁻¹S and (2/3)(2π)^{-1/2}S with S = Σ d²(n) n^{-3/2} summed plus tail."""
    series_limit = series_limit or LAB_CONFIG["moments"]["series_limit"]
    table = resources.divisor_table(int(series_limit))
    partial, tail = divisor_square_series(int(series_limit), table)
    series = partial + tail
    return {
        "divisor_series": series,
        "delta_coefficient": series / (6.0 * math.pi ** 2),
        "E_coefficient": (2.0 / 3.0) * (2.0 * math.pi) ** -0.5 * series,
    }


def local_e_star_mean_square(T: float, H: float, resources, epsilon0: float = 0.05) -> Dict[str, float]:
    """∫_{T-H}^{T+H} (E*)² against H T^{1/3} log³T + T^{1+ε₀}."""
    if not 0 < H <= T:
        raise ParameterError(f"need 0 < H <= T, got H={H}, T={T}")
    times, cumulative = zeta_family_cumulative(Quantity.E_STAR, 2, T + H, resources)
    value = float(np.interp(T + H, times, cumulative) - np.interp(T - H, times, cumulative))
    envelope = H * T ** (1.0 / 3.0) * math.log(T) ** 3 + T ** (1.0 + epsilon0)
    return {"T": T, "H": H, "integral": value, "envelope": envelope, "ratio": value / envelope}


# (quantity, power) -> (expected slope, tolerance)
EXPECTED_SLOPES = {
    (Quantity.DELTA, 2): (1.5, 0.05),
    (Quantity.DELTA, 3): (1.75, 0.1),
    (Quantity.DELTA, 4): (2.0, 0.1),
    (Quantity.DELTA_STAR, 2): (1.5, 0.05),
    (Quantity.DELTA_STAR, 3): (1.75, 0.1),
    (Quantity.DELTA_STAR, 4): (2.0, 0.1),
    (Quantity.E, 2): (1.5, 0.1),
    (Quantity.E, 3): (1.75, 0.15),
    (Quantity.E, 4): (2.0, 0.15),
}

# reported only: below T = 5000 the E-family fits sit above the asymptotic slopes
ADVISORY_SLOPES = frozenset({(Quantity.E, 2), (Quantity.E, 3), (Quantity.E, 4)})


def slope_check(estimate: MomentEstimate) -> MomentCheck:
    key = (estimate.quantity, estimate.power)
    expected, tolerance = EXPECTED_SLOPES[key]
    note = ""
    if math.isnan(estimate.fitted_slope):
        note = "integral not positive over a full decade"
    elif not math.isnan(estimate.fit_start):
        note = f"fitted on [{estimate.fit_start:g}, {estimate.T[-1]:g}]"
    return MomentCheck(
        name=f"slope {estimate.label}",
        observed=estimate.fitted_slope,
        expected=expected,
        tolerance=tolerance,
        passed=abs(estimate.fitted_slope - expected) <= tolerance,
        note=note,
        advisory=key in ADVISORY_SLOPES,
    )


def _cauchy_schwarz(quantity: Quantity, T: float, resources) -> MomentCheck:
    second = moment_integral(quantity, 2, T, resources)
    third = moment_integral(quantity, 3, T, resources, absolute=True)
    fourth = moment_integral(quantity, 4, T, resources)
    lhs = third * third
    rhs = second * fourth
    return MomentCheck(
        name=f"cauchy-schwarz {quantity.value}",
        observed=lhs / rhs,
        expected=1.0,
        tolerance=0.0,
        passed=lhs <= rhs * (1.0 + 1e-9),
        note="(∫|f|³)² / (∫f² ∫f⁴) must not exceed 1",
    )


def verify_moment_suite(resources, delta_t_max: Optional[float] = None,
                        e_t_max: Optional[float] = None,
                        series_limit: Optional[int] = None) -> MomentSuite:
    """Fit every moment exponent and compare with the asymptotic powers.

    Δ, Δ* moments run to delta_t_max, E, E* moments to e_t_max.
    """
    cfg = LAB_CONFIG["moments"]
    delta_t_max = delta_t_max or cfg["delta_t_max"]
    e_t_max = e_t_max or cfg["e_t_max"]

    estimates: List[MomentEstimate] = []
    checks: List[MomentCheck] = []
    for quantity, t_max in ((Quantity.DELTA, delta_t_max), (Quantity.DELTA_STAR, delta_t_max),
                            (Quantity.E, e_t_max), (Quantity.E_STAR, e_t_max)):
        for k in (2, 3, 4):
            # ∫(E*)³ changes sign on the desk range
            fit = not (quantity is Quantity.E_STAR and k == 3)
            estimate = moment_estimate(quantity, k, t_max, resources, fit=False)
            if fit:
                try:
                    fit_exponent(estimate)
                except DataError as exc:
                    if k % 2 == 0:
                        raise
                    logger.warning(f"No exponent for {estimate.label}: {exc}")
            estimates.append(estimate)
            if (quantity, k) in EXPECTED_SLOPES:
                checks.append(slope_check(estimate))
        checks.append(_cauchy_schwarz(quantity, t_max, resources))

    suite = MomentSuite(estimates=estimates, checks=checks)
    e_star_2 = suite.estimate(Quantity.E_STAR, 2)
    e_star_4 = suite.estimate(Quantity.E_STAR, 4)
    e_2 = suite.estimate(Quantity.E, 2)
    e_4 = suite.estimate(Quantity.E, 4)
    # ∫(E*)² ≪ T^{4/3} log³T
    normalised_slope, _, _ = fit_power_law(e_star_2.T, e_star_2.integrals / np.log(e_star_2.T) ** 3)
    slope_max = cfg["e_star_square_slope_max"]
    checks.append(MomentCheck("slope E_star^2 / log^3 T", normalised_slope, slope_max, 0.0,
                              normalised_slope < slope_max, "mean square of E* grows like T^{4/3} log³T"))
    checks.append(MomentCheck("slope E_star^2 below E^2", e_star_2.fitted_slope, e_2.fitted_slope, 0.0,
                              e_star_2.fitted_slope < e_2.fitted_slope, "same T range"))
    checks.append(MomentCheck("slope E_star^4 vs E^4", e_star_4.fitted_slope, e_4.fitted_slope - 0.1, 0.0,
                              e_star_4.fitted_slope <= e_4.fitted_slope - 0.1, "cancellation in E - 2πΔ*"))
    suite.extras["slope E_star^2 raw"] = e_star_2.fitted_slope

    constants = mean_square_constants(resources, series_limit)
    suite.extras.update(constants)
    delta_2 = suite.estimate(Quantity.DELTA, 2)
    delta_coeff = float(delta_2.integrals[-1] / delta_2.T[-1] ** 1.5)
    e_coeff = float(e_2.integrals[-1] / e_2.T[-1] ** 1.5)
    checks.append(MomentCheck("coefficient delta^2", delta_coeff, constants["delta_coefficient"],
                              cfg["delta_coefficient_tolerance"],
                              abs(delta_coeff / constants["delta_coefficient"] - 1)
                              <= cfg["delta_coefficient_tolerance"]))
    checks.append(MomentCheck("coefficient E^2", e_coeff, constants["E_coefficient"],
                              cfg["e_coefficient_tolerance"],
                              abs(e_coeff / constants["E_coefficient"] - 1) <= cfg["e_coefficient_tolerance"]))

    # leading coefficients at the largest T for every fitted power
    for estimate in estimates:
        key = (estimate.quantity, estimate.power)
        if key in EXPECTED_SLOPES:
            exponent = EXPECTED_SLOPES[key][0]
            suite.extras[f"leading {estimate.label}"] = float(estimate.integrals[-1] / estimate.T[-1] ** exponent)

    # E³, E⁴ against 16π⁴ ∫(Δ*)³ and 32π⁵ ∫(Δ*)⁴ over [1, T/2π]
    x_max = e_t_max / (2.0 * math.pi)
    for k, factor, name in ((3, 16.0 * math.pi ** 4, "16π⁴"), (4, 32.0 * math.pi ** 5, "32π⁵")):
        e_value = moment_integral(Quantity.E, k, e_t_max, resources)
        star_value = moment_integral(Quantity.DELTA_STAR, k, x_max, resources)
        suite.extras[f"E^{k} / {name}∫Δ*^{k}"] = e_value / (factor * star_value)

    local = local_e_star_mean_square(0.5 * e_t_max, 0.25 * e_t_max, resources)
    suite.extras["local E_star^2 ratio"] = local["ratio"]

    failed = [check.name for check in checks if not check.passed and not check.advisory]
    if failed:
        logger.warning(f"Moment checks outside tolerance: {', '.join(failed)}")
    reported = [check.name for check in checks if not check.passed and check.advisory]
    if reported:
        logger.info(f"Reported-only checks outside their windows: {', '.join(reported)}")
    return suite
