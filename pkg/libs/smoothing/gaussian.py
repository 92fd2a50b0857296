"""
Gaussian averages over a one-sided window and the two smoothing checks built on them.

    avg±(f, T) = (2/(√π G)) ∫₀^{G log T} f(T ± u) e^{-u²/G²} du
"""

import logging
import math
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from config import LAB_CONFIG
from libs.divisor.divisor_table import DivisorTable, delta_star_combination, delta_star_values
from libs.exceptions import CoverageError, ParameterError
from libs.smoothing.models import (
    GaussianKernelSpec,
    KernelSign,
    SampledFunction,
    SmoothingCheck,
    SmoothingReport,
)
from libs.zeta.sample_grid import E_values, ZetaSampleGrid

logger = logging.getLogger(__name__)


def gaussian_average(f: Callable, T: float, spec: GaussianKernelSpec,
                     max_step: Optional[float] = None) -> float:
    """Composite Simpson approximation of the normalised one-sided Gaussian average.

    Args:
        f: vectorised callable; a SampledFunction is checked for coverage first
        T: window centre
        spec: kernel width, truncation and side
        max_step: optional cap on the quadrature step (default G/20, and the sample
            step of f when it has one)
    """
    sign = spec.sign.factor
    low, high = sorted((T, T + sign * spec.truncation))
    if hasattr(f, "covers") and not f.covers(low, high):
        raise CoverageError(f"samples do not cover the averaging window [{low}, {high}]")

    step = spec.G / LAB_CONFIG["smoothing"]["steps_per_width"]
    if isinstance(f, SampledFunction):
        step = min(step, f.step)
    if max_step is not None:
        step = min(step, max_step)
    intervals = int(math.ceil(spec.truncation / step))
    intervals += intervals % 2
    u = np.linspace(0.0, spec.truncation, intervals + 1)
    y = np.asarray(f(T + sign * u), dtype=float) * np.exp(-(u / spec.G) ** 2)
    return float(2.0 / (math.sqrt(math.pi) * spec.G) * integrate.simpson(y, x=u))


def e_function(grid: ZetaSampleGrid) -> SampledFunction:
    """E(t) sampled on the zeta grid."""
    return SampledFunction(start=grid.t_start, step=grid.step, values=grid.e_on_grid())


def check_lemma2(T: float, G: float, grid: ZetaSampleGrid, constant: Optional[float] = None,
                 e_samples: Optional[SampledFunction] = None) -> SmoothingReport:
    """Sandwich avg-(E, T) - C·G log T <= E(T) <= avg+(E, T) + C·G log T."""
    constant = LAB_CONFIG["smoothing"]["envelope_constant"] if constant is None else constant
    if G < 1:
        raise ParameterError(f"the E(T) sandwich needs G >= 1, got {G}")
    plus = GaussianKernelSpec.for_window(G, T, KernelSign.PLUS)
    minus = GaussianKernelSpec.for_window(G, T, KernelSign.MINUS)
    grid.require(T - plus.truncation, T + plus.truncation, "E(T) sandwich")
    samples = e_samples if e_samples is not None else e_function(grid)

    value = float(E_values(np.array([T]), grid)[0])
    upper = gaussian_average(samples, T, plus)
    lower = gaussian_average(samples, T, minus)
    envelope = constant * G * math.log(T)
    checks = [
        SmoothingCheck("2.2", T, G, KernelSign.PLUS, value, upper, envelope, value <= upper + envelope),
        SmoothingCheck("2.3", T, G, KernelSign.MINUS, value, lower, envelope, value >= lower - envelope),
    ]
    report = SmoothingReport(lemma="2", T=T, G=G, checks=checks, tail_mass=plus.tail_mass,
                             extras={"upper_bound": upper + envelope, "lower_bound": lower - envelope})
    if not report.passed:
        logger.warning(f"E(T) sandwich violated at T={T}, G={G}: E={value:.6g}, "
                       f"[{lower - envelope:.6g}, {upper + envelope:.6g}]")
    return report


def check_lemma3(T: float, G: float, table: DivisorTable, constant: Optional[float] = None,
                 epsilon: Optional[float] = None, max_step: Optional[float] = None) -> SmoothingReport:
    """|Δ*(T/2π) - avg±(Δ*(·/2π), T)| <= C·G·T^ε for both sides.

    The unnormalised scaling G²T^ε is carried in extras for comparison.
    """
    cfg = LAB_CONFIG["smoothing"]
    constant = cfg["envelope_constant"] if constant is None else constant
    epsilon = cfg["lemma3_epsilon"] if epsilon is None else epsilon
    max_step = cfg["lemma3_max_step"] if max_step is None else max_step

    plus = GaussianKernelSpec.for_window(G, T, KernelSign.PLUS)
    table.require(math.floor(4.0 * (T + plus.truncation) / (2.0 * math.pi)), "Δ* window")

    def delta_star_of_t(ts):
        return delta_star_values(np.asarray(ts) / (2.0 * math.pi), table)

    centre = delta_star_combination(T / (2.0 * math.pi), table).value
    envelope = constant * G * T ** epsilon
    checks = []
    for sign in (KernelSign.PLUS, KernelSign.MINUS):
        spec = GaussianKernelSpec.for_window(G, T, sign)
        average = gaussian_average(delta_star_of_t, T, spec, max_step=max_step)
        checks.append(SmoothingCheck("2.4", T, G, sign, centre, average, envelope,
                                     abs(centre - average) <= envelope))
    report = SmoothingReport(
        lemma="3", T=T, G=G, checks=checks, tail_mass=plus.tail_mass,
        extras={"unnormalised_envelope": G * G * T ** epsilon},
    )
    if not report.passed:
        logger.warning(f"Δ* smoothing identity outside envelope at T={T}, G={G}")
    return report
