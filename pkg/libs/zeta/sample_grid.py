"""
Uniform t-grid of |ζ(½+it)|² samples and the quadratures built on it.

A grid is immutable once built; cumulative integrals of |ζ|^{2p} are computed once
per power by composite Simpson and reused for every T of a scan.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np
from scipy import integrate, special

from config import EULER_GAMMA, LAB_CONFIG
from libs.divisor.divisor_table import DivisorTable, delta_star_combination, delta_star_values
from libs.exceptions import CoverageError, ParameterError
from libs.zeta.models import ERoute, EValue, MethodTag
from libs.zeta.riemann_siegel import abs_squared

logger = logging.getLogger(__name__)

_COVER_SLACK = 1e-9


def max_grid_step(t_end: float) -> float:
    """Largest admissible step: π / log(t_end/2π + 2)."""
    return math.pi / math.log(max(t_end, 0.0) / (2.0 * math.pi) + 2.0)


def mean_square_main_term(T):
    """T(log(T/2π) + 2γ - 1), zero at T = 0."""
    T = np.asarray(T, dtype=float)
    return special.xlogy(T, T / (2.0 * math.pi)) + (2.0 * EULER_GAMMA - 1.0) * T


@dataclass(frozen=True)
class ZetaSampleGrid:
    """|ζ(½+it)|² at t_start + i·step, i = 0..len(values)-1."""
    t_start: float
    t_end: float
    step: float
    values: np.ndarray
    method_tag: MethodTag
    rs_order: int = 2
    _cumulative: Dict[int, np.ndarray] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.step <= 0:
            raise ParameterError(f"grid step must be positive, got {self.step}")
        if self.step > max_grid_step(self.t_end) * (1 + 1e-12):
            raise ParameterError(
                f"grid step {self.step} exceeds the density bound {max_grid_step(self.t_end):.4g}"
            )
        if np.any(self.values < 0):
            raise ParameterError("|ζ|² samples must be nonnegative")
        self.values.setflags(write=False)

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def times(self) -> np.ndarray:
        return self.t_start + self.step * np.arange(self.size)

    def covers(self, a: float, b: float) -> bool:
        slack = _COVER_SLACK * max(1.0, abs(self.t_end))
        return a >= self.t_start - slack and b <= self.t_end + slack

    def require(self, a: float, b: float, what: str = "") -> None:
        if not self.covers(a, b):
            detail = f" for {what}" if what else ""
            raise CoverageError(
                f"zeta grid [{self.t_start}, {self.t_end}] does not cover [{a}, {b}]{detail}"
            )

    def integrand(self, power: int = 1) -> np.ndarray:
        """|ζ|^{2·power} at the grid points."""
        return self.values if power == 1 else self.values ** power

    def cumulative(self, power: int = 1) -> np.ndarray:
        """∫_{t_start}^{t_i} |ζ|^{2·power} at every grid point (Simpson)."""
        cached = self._cumulative.get(power)
        if cached is None:
            cached = integrate.cumulative_simpson(self.integrand(power), dx=self.step, initial=0.0)
            cached.setflags(write=False)
            self._cumulative[power] = cached
        return cached

    def cumulative_at(self, ts, power: int = 1) -> np.ndarray:
        """Cumulative integral at arbitrary t, with a trapezoid over the last partial cell."""
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        if ts.size and not self.covers(float(ts.min()), float(ts.max())):
            self.require(float(ts.min()), float(ts.max()))
        ts = np.clip(ts, self.t_start, self.t_end)
        cum = self.cumulative(power)
        f = self.integrand(power)
        pos = (ts - self.t_start) / self.step
        i = np.minimum(np.floor(pos).astype(np.int64), self.size - 2)
        i = np.maximum(i, 0)
        frac = pos - i
        f_at = f[i] + frac * (f[i + 1] - f[i])
        return cum[i] + 0.5 * frac * self.step * (f[i] + f_at)

    def integral(self, a: float, b: float, power: int = 1) -> float:
        """∫_a^b |ζ(½+it)|^{2·power} dt."""
        if b < a:
            raise ParameterError(f"integral bounds reversed: [{a}, {b}]")
        self.require(a, b)
        ends = self.cumulative_at(np.array([a, b]), power)
        return float(ends[1] - ends[0])

    def e_on_grid(self) -> np.ndarray:
        """E(t_i) at every grid point; requires t_start = 0."""
        if self.t_start != 0.0:
            raise CoverageError("E(t) needs a grid starting at t = 0")
        return self.cumulative(1) - mean_square_main_term(self.times)

    def e_star_on_grid(self, table: DivisorTable) -> np.ndarray:
        """E*(t_i) = E(t_i) - 2πΔ*(t_i/2π) at every grid point."""
        table.require(math.floor(4.0 * self.t_end / (2.0 * math.pi)) + 1, "E*(t)")
        ts = self.times
        return self.e_on_grid() - 2.0 * math.pi * delta_star_values(ts / (2.0 * math.pi), table)


def _chunks(ts: np.ndarray, chunk: int):
    return [ts[i:i + chunk] for i in range(0, ts.shape[0], chunk)]


def build_grid(t_end: float, step: Optional[float] = None, t_start: float = 0.0,
               rs_order: Optional[int] = None, workers: Optional[int] = None) -> ZetaSampleGrid:
    """Sample |ζ(½+it)|² on [t_start, t_end] with the given step.

    The end point is rounded up to a whole number of steps. Chunks are evaluated in a
    thread pool and reassembled in order, so the result does not depend on scheduling.
    """
    cfg = LAB_CONFIG["zeta"]
    step = step or cfg["grid_step"]
    rs_order = cfg["rs_order"] if rs_order is None else rs_order
    workers = workers or cfg["grid_workers"]
    if t_end <= t_start or t_start < 0:
        raise ParameterError(f"grid needs 0 <= t_start < t_end, got [{t_start}, {t_end}]")

    count = int(math.ceil((t_end - t_start) / step - 1e-9)) + 1
    ts = t_start + step * np.arange(count)
    pieces = _chunks(ts, cfg["grid_chunk"])
    with ThreadPoolExecutor(max_workers=workers) as pool:
        values = np.concatenate(list(pool.map(lambda part: abs_squared(part, rs_order), pieces)))

    tag = (MethodTag.RIEMANN_SIEGEL if ts[-1] >= cfg["euler_maclaurin_below"]
           else MethodTag.EULER_MACLAURIN)
    logger.info(f"Built zeta grid [{t_start}, {ts[-1]:.4f}] step {step} ({count} samples, {tag.value})")
    return ZetaSampleGrid(
        t_start=float(t_start), t_end=float(ts[-1]), step=float(step),
        values=values, method_tag=tag, rs_order=int(rs_order),
    )


def mean_square_integral(T: float, grid: ZetaSampleGrid) -> float:
    """∫₀ᵀ |ζ(½+it)|² dt."""
    if T < 0:
        raise ParameterError(f"T must be nonnegative, got {T}")
    if grid.t_start != 0.0:
        raise CoverageError("mean square integral needs a grid starting at t = 0")
    if T == 0:
        return 0.0
    return grid.integral(0.0, T)


def E(T: float, grid: ZetaSampleGrid) -> EValue:
    """E(T) = ∫₀ᵀ|ζ(½+it)|²dt - T(log(T/2π) + 2γ - 1)."""
    if T <= 0:
        raise ParameterError(f"E(T) requires T > 0, got {T}")
    value = mean_square_integral(T, grid) - float(mean_square_main_term(T))
    return EValue(T=T, value=value, route=ERoute.QUADRATURE)


def E_values(Ts, grid: ZetaSampleGrid) -> np.ndarray:
    """Vectorised E(T) over positive T."""
    Ts = np.asarray(Ts, dtype=float)
    if grid.t_start != 0.0:
        raise CoverageError("E(T) needs a grid starting at t = 0")
    return grid.cumulative_at(Ts) - mean_square_main_term(Ts)


def E_star(t: float, grid: ZetaSampleGrid, table: DivisorTable) -> float:
    """E*(t) = E(t) - 2πΔ*(t/2π)."""
    if t <= 0:
        raise ParameterError(f"E*(t) requires t > 0, got {t}")
    table.require(math.floor(4.0 * t / (2.0 * math.pi)) + 1, "E*(t)")
    return E(t, grid).value - 2.0 * math.pi * delta_star_combination(t / (2.0 * math.pi), table).value
