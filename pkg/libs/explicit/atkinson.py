"""
Atkinson's explicit formula E(T) = Σ₁(T) + Σ₂(T) + O(log²T).

    Σ₁ = √2 (T/2π)^{1/4} Σ_{n<=N} (-1)ⁿ d(n) n^{-3/4} e(T,n) cos f(T,n)
    Σ₂ = -2 Σ_{n<=N'} d(n) n^{-1/2} (log(T/2πn))^{-1} cos(T log(T/2πn) - T + π/4)

f and e are always taken in their exact closed forms.
"""

import logging
import math
from typing import Tuple

import numpy as np

from libs.divisor.divisor_table import DivisorTable
from libs.exceptions import ParameterError
from libs.explicit.models import AtkinsonParams
from libs.zeta.models import ERoute, EValue

logger = logging.getLogger(__name__)


def arsinh(x):
    """log(x + √(1+x²)), computed through log1p and odd symmetry."""
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    value = np.sign(x) * np.log1p(ax + ax * ax / (1.0 + np.sqrt(1.0 + ax * ax)))
    return float(value) if value.ndim == 0 else value


def _f(T: float, n: np.ndarray) -> np.ndarray:
    return (
        2.0 * T * arsinh(np.sqrt(math.pi * n / (2.0 * T)))
        + np.sqrt(2.0 * math.pi * n * T + (math.pi * n) ** 2)
        - math.pi / 4.0
    )


def _e(T: float, n: np.ndarray) -> np.ndarray:
    root = np.sqrt(math.pi * n / (2.0 * T))
    return (1.0 + math.pi * n / (2.0 * T)) ** -0.25 / (arsinh(root) / root)


def f_atkinson(T: float, n) -> float:
    """f(T,n) = 2T arsinh(√(πn/2T)) + √(2πnT + π²n²) - π/4."""
    if T <= 0 or np.any(np.asarray(n) < 1):
        raise ParameterError(f"f(T,n) needs T > 0 and n >= 1, got T={T}, n={n}")
    value = _f(T, np.asarray(n, dtype=float))
    return float(value) if np.ndim(value) == 0 else value


def f_atkinson_dT(T: float, n) -> float:
    """∂f/∂T = 2 arsinh(√(πn/2T))."""
    return 2.0 * arsinh(np.sqrt(math.pi * np.asarray(n, dtype=float) / (2.0 * T)))


def e_atkinson(T: float, n) -> float:
    """e(T,n) = (1+πn/2T)^{-1/4} {(2T/πn)^{1/2} arsinh(√(πn/2T))}^{-1}, for 1 <= n < T."""
    n_arr = np.asarray(n, dtype=float)
    if T <= 1 or np.any(n_arr < 1) or np.any(n_arr >= T):
        raise ParameterError(f"e(T,n) needs 1 <= n < T, got T={T}, n={n}")
    value = _e(T, n_arr)
    return float(value) if np.ndim(value) == 0 else value


def atkinson_components(T: float, params: AtkinsonParams, table: DivisorTable) -> Tuple[float, float]:
    """(Σ₁(T), Σ₂(T)) with compensated summation in ascending n."""
    if params.T != T:
        raise ParameterError(f"params built for T={params.T}, evaluated at T={T}")
    N = int(math.floor(params.N))
    table.require(N, "Atkinson Σ₁")

    n = np.arange(1, N + 1, dtype=float)
    d = table.d[1:N + 1].astype(float)
    signed = np.where(n % 2 == 0, d, -d)
    terms = signed * n ** -0.75 * _e(T, n) * np.cos(_f(T, n))
    sigma1 = math.sqrt(2.0) * (T / (2.0 * math.pi)) ** 0.25 * math.fsum(terms)

    n_prime = int(math.floor(params.N_prime))
    if not params.N_prime < T / (2.0 * math.pi):
        raise ParameterError(f"N'={params.N_prime} reaches the resonance T/2π={T / (2 * math.pi)}")
    sigma2 = 0.0
    if n_prime >= 1:
        m = np.arange(1, n_prime + 1, dtype=float)
        log_ratio = np.log(T / (2.0 * math.pi * m))
        terms2 = (
            table.d[1:n_prime + 1].astype(float) / np.sqrt(m) / log_ratio
            * np.cos(T * log_ratio - T + math.pi / 4.0)
        )
        sigma2 = -2.0 * math.fsum(terms2)
    return sigma1, sigma2


def atkinson_E(T: float, params: AtkinsonParams, table: DivisorTable) -> EValue:
    """E(T) ≈ Σ₁(T) + Σ₂(T)."""
    sigma1, sigma2 = atkinson_components(T, params, table)
    logger.debug(f"Atkinson T={T}: Σ1={sigma1:.6g}, Σ2={sigma2:.6g}")
    return EValue(T=T, value=sigma1 + sigma2, route=ERoute.ATKINSON)


def atkinson_envelope(T: float, constant: float) -> float:
    """C·log²T, the allowed gap to the quadrature route."""
    return constant * math.log(T) ** 2
