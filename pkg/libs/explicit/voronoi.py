"""
Truncated Voronoi series for Δ(x) and Δ*(x).

    Δ(x)  ≈ (π√2)⁻¹ x^{1/4} Σ_{n<=N} d(n) n^{-3/4} cos(4π√(nx) - π/4)
    Δ*(x) ≈ the same with (-1)ⁿ d(n)

with truncation error O(x^{1/2+ε} N^{-1/2}) for 2 <= N << x.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from config import LAB_CONFIG
from libs.divisor.divisor_table import (
    DivisorTable,
    delta_star_values,
    delta_values,
    divisor_square_constant,
)
from libs.exceptions import ParameterError
from libs.explicit.models import SeriesResult

logger = logging.getLogger(__name__)


def _check_truncation(x: float, N: int, table: DivisorTable, ratio: Optional[float]) -> None:
    ratio = LAB_CONFIG["explicit"]["voronoi_n_ratio"] if ratio is None else ratio
    if x <= 0:
        raise ParameterError(f"Voronoi series needs x > 0, got {x}")
    if N < 2 or N > table.limit:
        raise ParameterError(f"truncation N={N} must satisfy 2 <= N <= table limit {table.limit}")
    if N > x * ratio:
        raise ParameterError(f"truncation N={N} exceeds x·ratio = {x * ratio:g}")


def _series(x: float, N: int, table: DivisorTable, alternating: bool,
            ratio: Optional[float], epsilon0: Optional[float]) -> SeriesResult:
    _check_truncation(x, N, table, ratio)
    epsilon0 = LAB_CONFIG["explicit"]["epsilon0"] if epsilon0 is None else epsilon0
    n = np.arange(1, N + 1, dtype=float)
    coeffs = table.d[1:N + 1].astype(float)
    if alternating:
        coeffs = np.where(n % 2 == 0, coeffs, -coeffs)
    terms = coeffs * n ** -0.75 * np.cos(4.0 * math.pi * np.sqrt(n * x) - math.pi / 4.0)
    value = x ** 0.25 / (math.pi * math.sqrt(2.0)) * math.fsum(terms)
    envelope = x ** (0.5 + epsilon0) / math.sqrt(N)
    return SeriesResult(value=value, N=int(N), error_envelope=envelope)


def voronoi_delta(x: float, N: int, table: DivisorTable, ratio: Optional[float] = None,
                  epsilon0: Optional[float] = None) -> SeriesResult:
    """Truncated Voronoi series for Δ(x)."""
    return _series(x, N, table, False, ratio, epsilon0)


def voronoi_delta_star(x: float, N: int, table: DivisorTable, ratio: Optional[float] = None,
                       epsilon0: Optional[float] = None) -> SeriesResult:
    """Truncated Voronoi series for Δ*(x), coefficients (-1)ⁿ d(n)."""
    return _series(x, N, table, True, ratio, epsilon0)


def voronoi_convergence(xs: Sequence[float], Ns: Sequence[int], table: DivisorTable,
                        alternating: bool = False) -> List[Dict]:
    """RMS truncation error against the exact divisor-sum route for each N.

    Returns one row per N (ascending) with the RMS error, the mean envelope, the
    ratio rms(previous N) / rms(this N) and the RMS predicted from the mean square of
    the omitted terms, (π√2)⁻¹ (mean x^{1/2})^{1/2} (½ Σ_{n>N} d²(n) n^{-3/2})^{1/2}.
    """
    xs = np.asarray(xs, dtype=float)
    series = voronoi_delta_star if alternating else voronoi_delta
    exact = delta_star_values(xs, table) if alternating else delta_values(xs, table)
    rows = []
    previous = None
    total = divisor_square_constant()
    root_mean_x = math.sqrt(float(np.mean(np.sqrt(xs))))
    for N in sorted(int(v) for v in Ns):
        n = np.arange(1, N + 1, dtype=float)
        head = math.fsum(table.d[1:N + 1].astype(float) ** 2 * n ** -1.5)
        predicted = root_mean_x * math.sqrt(0.5 * max(total - head, 0.0)) / (math.pi * math.sqrt(2.0))
        results = [series(float(x), N, table) for x in xs]
        errors = np.array([r.value for r in results]) - exact
        rms = float(np.sqrt(np.mean(errors ** 2)))
        rows.append({
            "N": N,
            "quantity": "delta_star" if alternating else "delta",
            "rms_error": rms,
            "mean_envelope": float(np.mean([r.error_envelope for r in results])),
            "shrink_ratio": (previous / rms) if previous else float("nan"),
            "predicted_rms": predicted,
        })
        previous = rms
        logger.info(f"Voronoi {'Δ*' if alternating else 'Δ'} N={N}: rms={rms:.5g}")
    return rows


def mollifier_width(T: float, N: float) -> float:
    """Gaussian width G = √((T/N) log T) matched to a Voronoi truncation N."""
    if T <= 1 or N <= 0:
        raise ParameterError(f"need T > 1 and N > 0, got T={T}, N={N}")
    return math.sqrt(T / N * math.log(T))
