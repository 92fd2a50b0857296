"""
ζ(½+it) on the critical line.

Riemann–Siegel main sum with up to three correction terms for t >= the configured
threshold, Euler–Maclaurin summation below it. Everything is double precision.
"""

import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy import special

from config import LAB_CONFIG

logger = logging.getLogger(__name__)

# Taylor coefficients of C0 = cos(2π(p²-p-1/16))/cos(2πp) in powers of w² with w = 2p-1
_C0_EVEN_COEFFS = (
    0.38268343236508977173,
    0.43724046807752044936,
    0.13237657548034352333,
    -0.01360502604767418865,
    -0.01356762197010358088,
    -0.00162372532314446528,
    0.00029705353733379691,
    0.00007943300879521470,
    0.00000046556124614505,
    -0.00000143272516309551,
    -0.00000010354847112313,
    0.00000001235792708386,
    0.00000000178810838580,
    -0.00000000003391414390,
    -0.00000000001632663390,
    -0.00000000000037851093,
    0.00000000000009327423,
    0.00000000000000522184,
    -0.00000000000000033507,
    -0.00000000000000003412,
    0.00000000000000000058,
    0.00000000000000000015,
)


@lru_cache(maxsize=1)
def correction_polynomials() -> Tuple[Polynomial, Polynomial, Polynomial]:
    """C0, C1, C2 as polynomials in w = 2p - 1.

    With d/dp = 2 d/dw:
        C1 = -C0'''(w) / (12π²)
        C2 = C0⁽⁶⁾(w) / (288π⁴) + C0''(w) / (16π²)
    """
    coeffs = np.zeros(2 * len(_C0_EVEN_COEFFS) - 1)
    coeffs[::2] = _C0_EVEN_COEFFS
    c0 = Polynomial(coeffs)
    c1 = -c0.deriv(3) / (12.0 * math.pi ** 2)
    c2 = c0.deriv(6) / (288.0 * math.pi ** 4) + c0.deriv(2) / (16.0 * math.pi ** 2)
    return c0, c1, c2


def theta(t):
    """Riemann–Siegel phase θ(t) by its asymptotic series through the t⁻⁵ term."""
    t = np.asarray(t, dtype=float)
    return (
        0.5 * t * np.log(t / (2.0 * math.pi))
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t ** 3)
        + 31.0 / (80640.0 * t ** 5)
    )


def theta_exact(t: float) -> float:
    """θ(t) = Im log Γ(1/4 + it/2) - (t/2) log π, valid for small t as well."""
    return float(np.imag(special.loggamma(0.25 + 0.5j * t)) - 0.5 * t * math.log(math.pi))


def hardy_z(t, order: Optional[int] = None) -> np.ndarray:
    """Vectorised Riemann–Siegel Z(t) for t > 0 (intended for t >= 30).

    Args:
        t: scalar or array of heights
        order: number of correction terms beyond C0 (0, 1 or 2)
    """
    if order is None:
        order = LAB_CONFIG["zeta"]["rs_order"]
    if order not in (0, 1, 2):
        raise ValueError(f"Riemann-Siegel order must be 0, 1 or 2, got {order}")

    t = np.atleast_1d(np.asarray(t, dtype=float))
    a = np.sqrt(t / (2.0 * math.pi))
    m = np.floor(a).astype(np.int64)
    w = 2.0 * (a - m) - 1.0
    th = theta(t)

    m_max = int(m.max()) if m.size else 0
    n = np.arange(1, m_max + 1, dtype=float)
    phases = th[:, None] - t[:, None] * np.log(n)[None, :]
    terms = np.cos(phases) / np.sqrt(n)[None, :]
    terms[n[None, :] > m[:, None]] = 0.0
    main = 2.0 * terms.sum(axis=1)

    c0, c1, c2 = correction_polynomials()
    correction = c0(w)
    if order >= 1:
        correction = correction + c1(w) / a
    if order >= 2:
        correction = correction + c2(w) / a ** 2
    sign = np.where(m % 2 == 1, 1.0, -1.0)
    return main + sign * correction / np.sqrt(a)


def euler_maclaurin_zeta(s: complex, terms: Optional[int] = None,
                         corrections: Optional[int] = None) -> complex:
    """ζ(s) by Euler–Maclaurin summation.

    ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + ½N^{-s}
           + Σ_{k=1}^{M} B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    """
    big_n = terms or LAB_CONFIG["zeta"]["em_terms"]
    big_m = corrections or LAB_CONFIG["zeta"]["em_corrections"]
    n = np.arange(1, big_n, dtype=float)
    total = complex(np.sum(n ** (-s)))
    total += big_n ** (1.0 - s) / (s - 1.0) + 0.5 * big_n ** (-s)

    bernoulli = special.bernoulli(2 * big_m)
    rising = s
    power = big_n ** (-s - 1.0)
    factorial = 2.0
    for k in range(1, big_m + 1):
        total += bernoulli[2 * k] / factorial * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= big_n * big_n
        factorial *= (2 * k + 1) * (2 * k + 2)
    return total


def zeta_half(t: float) -> complex:
    """ζ(½+it). Negative t is served by conjugate symmetry."""
    if t < 0:
        return zeta_half(-t).conjugate()
    if t < LAB_CONFIG["zeta"]["euler_maclaurin_below"]:
        return euler_maclaurin_zeta(complex(0.5, t))
    z = float(hardy_z(t)[0])
    th = float(theta(t))
    return complex(z * math.cos(th), -z * math.sin(th))


def abs_squared(ts: np.ndarray, order: Optional[int] = None) -> np.ndarray:
    """|ζ(½+it)|² over an array of t >= 0."""
    ts = np.asarray(ts, dtype=float)
    out = np.empty_like(ts)
    threshold = LAB_CONFIG["zeta"]["euler_maclaurin_below"]
    low = ts < threshold
    for i in np.flatnonzero(low):
        out[i] = abs(euler_maclaurin_zeta(complex(0.5, ts[i]))) ** 2
    if np.any(~low):
        out[~low] = hardy_z(ts[~low], order) ** 2
    return out
