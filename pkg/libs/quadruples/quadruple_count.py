"""
Exact counts of ordered quadruples N < n₁,n₂,n₃,n₄ <= 2N with

    |n₁^{1/k} + n₂^{1/k} - n₃^{1/k} - n₄^{1/k}| < δN^{1/k}

by sorting the N² pair sums and counting near-coincident pairs with binary search.
Differences within the tie tolerance of the threshold cannot be resolved in floating
point; they are counted and reported in the ties column.
"""

import logging
from typing import Iterable, List, Optional

import numpy as np

from config import LAB_CONFIG
from libs.exceptions import ParameterError, SizingError
from libs.quadruples.models import QuadrupleReport

logger = logging.getLogger(__name__)


def _check(N: int, k: int, delta: float, cap: Optional[int]) -> None:
    cap = LAB_CONFIG["quadruples"]["n_cap"] if cap is None else cap
    if N < 1 or k < 2 or not delta > 0:
        raise ParameterError(f"need N >= 1, k >= 2, δ > 0; got N={N}, k={k}, δ={delta}")
    if N > cap:
        raise SizingError(f"N={N} exceeds the pair-sum cap {cap} ({N * N} sums)")


def roots(N: int, k: int) -> np.ndarray:
    """n^{1/k} for N < n <= 2N."""
    return np.arange(N + 1, 2 * N + 1, dtype=float) ** (1.0 / k)


def pair_sums(N: int, k: int, reverse_roles: bool = False) -> np.ndarray:
    """Sorted n₁^{1/k} + n₂^{1/k} over all ordered pairs."""
    r = roots(N, k)
    sums = (r[None, :] + r[:, None]) if reverse_roles else (r[:, None] + r[None, :])
    sums = sums.ravel()
    if reverse_roles:
        return np.sort(-sums)
    return np.sort(sums)


def envelope(N: int, delta: float, epsilon0: Optional[float] = None) -> float:
    """N^ε(N⁴δ + N²)."""
    epsilon0 = LAB_CONFIG["quadruples"]["epsilon0"] if epsilon0 is None else epsilon0
    return float(N) ** epsilon0 * (float(N) ** 4 * delta + float(N) ** 2)


def count_quadruples(N: int, k: int, delta: float, epsilon0: Optional[float] = None,
                     constant: Optional[float] = None, cap: Optional[int] = None,
                     reverse_roles: bool = False) -> QuadrupleReport:
    """Count ordered quadruples in (N, 2N]⁴ meeting the strict inequality."""
    _check(N, k, delta, cap)
    cfg = LAB_CONFIG["quadruples"]
    constant = cfg["lemma1_constant"] if constant is None else constant
    tolerance = cfg["tie_tolerance"]
    s = pair_sums(N, k, reverse_roles)
    threshold = delta * float(N) ** (1.0 / k)

    inclusive = (np.searchsorted(s, s + threshold + tolerance, side="right")
                 - np.searchsorted(s, s - threshold - tolerance, side="left"))
    strict = (np.searchsorted(s, s + threshold - tolerance, side="left")
              - np.searchsorted(s, s - threshold + tolerance, side="right"))
    count = int(inclusive.sum(dtype=np.int64))
    ties = count - int(np.maximum(strict, 0).sum(dtype=np.int64))

    bound = envelope(N, delta, epsilon0)
    report = QuadrupleReport(N=N, k=k, delta=delta, count=count, envelope=bound, ties=ties,
                             passed=count / bound <= constant)
    if ties:
        logger.warning(f"{ties} quadruples within {tolerance} of the threshold at N={N}, k={k}, δ={delta}")
    return report


def brute_force_count(N: int, k: int, delta: float) -> int:
    """Direct O(N⁴) count, one first pair at a time."""
    if N < 1 or k < 2 or not delta > 0:
        raise ParameterError(f"need N >= 1, k >= 2, δ > 0; got N={N}, k={k}, δ={delta}")
    r = roots(N, k)
    others = (r[:, None] + r[None, :]).ravel()
    threshold = delta * float(N) ** (1.0 / k)
    total = 0
    for a in r:
        for b in r:
            total += int(np.count_nonzero(np.abs(a + b - others) < threshold))
    return total


def default_delta_grid(count: Optional[int] = None) -> np.ndarray:
    """Geometric δ values from 10⁻⁴ to 1."""
    count = count or LAB_CONFIG["quadruples"]["sweep_delta_count"]
    return np.geomspace(1e-4, 1.0, count)


def verify_lemma1(N_list: Optional[Iterable[int]] = None, k_list: Optional[Iterable[int]] = None,
                  delta_grid: Optional[Iterable[float]] = None,
                  constant: Optional[float] = None,
                  epsilon0: Optional[float] = None) -> List[QuadrupleReport]:
    """count / envelope <= C for every (N, k, δ) of the sweep; unset axes take the configured grids."""
    cfg = LAB_CONFIG["quadruples"]
    N_list = list(N_list or cfg["sweep_n"])
    k_list = list(k_list or cfg["sweep_k"])
    deltas = list(default_delta_grid() if delta_grid is None else delta_grid)
    reports = []
    for k in k_list:
        for N in N_list:
            for delta in deltas:
                report = count_quadruples(int(N), int(k), float(delta), epsilon0=epsilon0, constant=constant)
                reports.append(report)
                logger.info(f"N={N} k={k} δ={delta:.3g}: count={report.count}, ratio={report.ratio:.3f}")
    failed = [r for r in reports if not r.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(reports)} quadruple counts exceed the envelope constant")
    return reports
