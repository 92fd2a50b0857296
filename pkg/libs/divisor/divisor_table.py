"""
Divisor-count table and the error terms Δ(x), Δ*(x) of the Dirichlet divisor problem.

Prefix sums are exact int64; Δ is assembled in double precision from the exact
integer part, so the cancellation against x log x never goes through a floating
summation of d(n). Sums over n <= x include n = x with full weight.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import integrate, special

from config import EULER_GAMMA, LAB_CONFIG
from libs.divisor.models import DeltaRoute, DeltaValue
from libs.exceptions import DataError, ParameterError, SizingError, TableUnderflowError

logger = logging.getLogger(__name__)

# int32 d, int64 prefix, int64 alternating prefix
_BYTES_PER_ENTRY = 4 + 8 + 8


@dataclass(frozen=True)
class DivisorTable:
    """Sieved d(n) for 1 <= n <= limit with exact cumulative sums.

    Arrays are indexed by n directly: d[0] = 0, prefix[0] = 0.
    """
    limit: int
    d: np.ndarray
    prefix: np.ndarray
    alternating_prefix: np.ndarray

    def __post_init__(self):
        for array in (self.d, self.prefix, self.alternating_prefix):
            array.setflags(write=False)

    def require(self, needed: int, what: str = "") -> None:
        if needed > self.limit:
            raise TableUnderflowError(needed, self.limit, what)


def hyperbola_sum(limit: int) -> int:
    """Σ_{n<=limit} floor(limit/n) by the hyperbola method, in O(√limit)."""
    root = math.isqrt(limit)
    return 2 * sum(limit // i for i in range(1, root + 1)) - root * root


def table_from_counts(d: np.ndarray) -> DivisorTable:
    """Build prefix sums from d(0..limit) and validate them against the hyperbola identity."""
    limit = int(d.shape[0] - 1)
    prefix = np.zeros(limit + 1, dtype=np.int64)
    np.cumsum(d[1:], dtype=np.int64, out=prefix[1:])

    signs = np.where(np.arange(limit + 1) % 2 == 0, 1, -1).astype(np.int64)
    alternating = np.cumsum(d.astype(np.int64) * signs, dtype=np.int64)

    expected = hyperbola_sum(limit)
    if int(prefix[limit]) != expected:
        raise DataError(
            f"hyperbola identity failed at limit {limit}: prefix={int(prefix[limit])}, "
            f"Σ floor(limit/n)={expected}"
        )
    return DivisorTable(limit=limit, d=d, prefix=prefix, alternating_prefix=alternating)


def sieve_divisors(limit: int, memory_budget: Optional[int] = None) -> DivisorTable:
    """Sieve d(n) for n <= limit.

    Every n = i*j with i < j is hit once from its smaller factor i <= √limit (adding 2),
    squares once more (adding 1), so the loop runs √limit times over numpy slices.

    Args:
        limit: largest n in the table
        memory_budget: byte cap; defaults to LAB_CONFIG["divisor"]["memory_budget_bytes"]

    Returns:
        DivisorTable satisfying d[1] = 1 and the hyperbola identity
    """
    if memory_budget is None:
        memory_budget = LAB_CONFIG["divisor"]["memory_budget_bytes"]
    if limit is None or int(limit) < 1:
        raise SizingError(f"sieve limit must be >= 1, got {limit}")
    limit = int(limit)
    needed = (limit + 1) * _BYTES_PER_ENTRY
    if needed > memory_budget:
        raise SizingError(
            f"sieve to {limit} needs about {needed / 2**20:.1f} MiB, budget is "
            f"{memory_budget / 2**20:.1f} MiB; lower the limit or raise ZDL_MEMORY_BUDGET_MB"
        )

    d = np.zeros(limit + 1, dtype=np.int32)
    root = math.isqrt(limit)
    for i in range(1, root + 1):
        d[i * i] += 1
        d[i * (i + 1)::i] += 2

    table = table_from_counts(d)
    logger.info(f"Sieved d(n) up to {limit} (prefix={int(table.prefix[limit])})")
    return table


def _main_term(x):
    """x(log x + 2γ - 1), with the x = 0 limit taken as 0."""
    return special.xlogy(x, x) + (2.0 * EULER_GAMMA - 1.0) * x


def delta_values(xs, table: DivisorTable) -> np.ndarray:
    """Vectorised Δ(x) for x > 0 (the divisor sum is empty below 1)."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise ParameterError("Δ(x) needs x >= 0")
    m = np.floor(xs).astype(np.int64)
    if m.size:
        table.require(int(m.max()), "Δ(x)")
    return table.prefix[m].astype(float) - _main_term(xs) - 0.25


def delta_star_values(xs, table: DivisorTable) -> np.ndarray:
    """Vectorised Δ*(x) through the alternating divisor sum, x >= 0."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise ParameterError("Δ*(x) needs x >= 0")
    m = np.floor(4.0 * xs).astype(np.int64)
    if m.size:
        table.require(int(m.max()), "Δ*(x)")
    return 0.5 * table.alternating_prefix[m].astype(float) - _main_term(xs) - 0.125


def delta(x: float, table: DivisorTable) -> DeltaValue:
    """Δ(x) = Σ_{n<=x} d(n) - x(log x + 2γ - 1) - 1/4."""
    if x < 1:
        raise ParameterError(f"Δ(x) requires x >= 1, got {x}")
    m = math.floor(x)
    table.require(m, "Δ(x)")
    value = float(table.prefix[m]) - x * (math.log(x) + 2.0 * EULER_GAMMA - 1.0) - 0.25
    return DeltaValue(x=x, value=value, route=DeltaRoute.EXACT)


def _delta_any(x: float, table: DivisorTable) -> float:
    return float(delta_values(np.array([x]), table)[0])


def delta_star_combination(x: float, table: DivisorTable) -> DeltaValue:
    """Δ*(x) := -Δ(x) + 2Δ(2x) - ½Δ(4x)."""
    if x <= 0:
        raise ParameterError(f"Δ*(x) requires x > 0, got {x}")
    table.require(math.floor(4 * x), "Δ*(x)")
    value = -_delta_any(x, table) + 2.0 * _delta_any(2 * x, table) - 0.5 * _delta_any(4 * x, table)
    return DeltaValue(x=x, value=value, route=DeltaRoute.COMBINATION)


def delta_star_alternating(x: float, table: DivisorTable) -> DeltaValue:
    """Δ*(x) from ½Σ_{n<=4x}(-1)^n d(n) - x(log x + 2γ - 1) - 1/8.

    The constant -1/8 makes this agree exactly with the combination route when Δ
    carries the -1/4 of its definition.
    """
    if x <= 0:
        raise ParameterError(f"Δ*(x) requires x > 0, got {x}")
    m = math.floor(4 * x)
    table.require(m, "Δ*(x)")
    value = (
        0.5 * float(table.alternating_prefix[m])
        - x * (math.log(x) + 2.0 * EULER_GAMMA - 1.0)
        - 0.125
    )
    return DeltaValue(x=x, value=value, route=DeltaRoute.ALTERNATING)


def cross_route_gap(x: float, table: DivisorTable) -> Tuple[float, bool]:
    """|Δ*_combination - Δ*_alternating| and whether it is within tolerance."""
    combined = delta_star_combination(x, table).value
    alternating = delta_star_alternating(x, table).value
    gap = abs(combined - alternating)
    tolerance = LAB_CONFIG["divisor"]["cross_route_tolerance"] * (1.0 + abs(combined))
    return gap, gap <= tolerance


def divisor_square_series(limit: int, table: DivisorTable) -> Tuple[float, float]:
    """Σ_{n<=limit} d²(n) n^{-3/2} and an estimate of the tail beyond limit.

    The tail uses Σ_{n<=x} d²(n) ~ π^{-2} x log³x, i.e. the density
    π^{-2}(log³u + 3 log²u).
    """
    table.require(limit, "Σ d²(n) n^{-3/2}")
    n = np.arange(1, limit + 1, dtype=float)
    d = table.d[1:limit + 1].astype(float)
    partial = math.fsum(d * d * n ** -1.5)

    def density(u):
        log_u = math.log(u)
        return (log_u ** 3 + 3.0 * log_u ** 2) * u ** -1.5 / math.pi ** 2

    tail, _ = integrate.quad(density, float(limit), np.inf, limit=200)
    return partial, tail


def divisor_square_constant() -> float:
    """Σ d²(n) n^{-3/2} = ζ(3/2)⁴ / ζ(3)."""
    return float(special.zeta(1.5) ** 4 / special.zeta(3.0))
