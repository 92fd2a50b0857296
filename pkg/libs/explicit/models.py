#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
顯式公式資料模型
"""

import math
from dataclasses import dataclass
from typing import Optional

from config import LAB_CONFIG
from libs.exceptions import ParameterError


@dataclass(frozen=True)
class SeriesResult:
    """截斷級數的值、截斷參數與誤差包絡"""
    value: float
    N: int
    error_envelope: float

    def __post_init__(self):
        if self.N < 2:
            raise ParameterError(f"series truncation must be >= 2, got {self.N}")
        if not self.error_envelope > 0:
            raise ParameterError("error envelope must be positive")


@dataclass(frozen=True)
class AtkinsonParams:
    """Atkinson 公式參數 (T, N, N')"""
    T: float
    N: float
    N_prime: float

    @staticmethod
    def n_prime(T: float, N: float) -> float:
        """N' = T/2π + N/2 - (N²/4 + NT/2π)^{1/2}"""
        return T / (2 * math.pi) + N / 2 - math.sqrt(N * N / 4 + N * T / (2 * math.pi))

    @classmethod
    def from_truncation(cls, T: float, N: Optional[float] = None,
                        A: Optional[float] = None, A_prime: Optional[float] = None) -> "AtkinsonParams":
        """建立並驗證參數，預設 N = T"""
        cfg = LAB_CONFIG["explicit"]
        A = cfg["atkinson_A"] if A is None else A
        A_prime = cfg["atkinson_A_prime"] if A_prime is None else A_prime
        if T <= 0:
            raise ParameterError(f"Atkinson formula requires T > 0, got {T}")
        if not 0 < A < A_prime:
            raise ParameterError(f"need 0 < A < A', got A={A}, A'={A_prime}")
        N = float(T) if N is None else float(N)
        if not A * T < N < A_prime * T:
            raise ParameterError(f"N={N} outside ({A}·T, {A_prime}·T) for T={T}")
        params = cls(T=float(T), N=N, N_prime=cls.n_prime(T, N))
        if not 0 < params.N_prime < params.N:
            raise ParameterError(f"N'={params.N_prime} must lie in (0, N)")
        return params
