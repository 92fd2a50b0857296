#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Gaussian 平滑資料模型
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List

import numpy as np

from libs.exceptions import CoverageError, ParameterError


class KernelSign(Enum):
    """平均方向 T+u 或 T-u"""
    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> float:
        return 1.0 if self is KernelSign.PLUS else -1.0


@dataclass(frozen=True)
class GaussianKernelSpec:
    """寬度 G、截斷長度與方向"""
    G: float
    truncation: float
    sign: KernelSign = KernelSign.PLUS

    def __post_init__(self):
        if not self.G > 0:
            raise ParameterError(f"kernel width G must be positive, got {self.G}")
        if not self.truncation > 0:
            raise ParameterError(f"kernel truncation must be positive, got {self.truncation}")

    @classmethod
    def for_window(cls, G: float, T: float, sign: KernelSign = KernelSign.PLUS) -> "GaussianKernelSpec":
        """截斷於 G log T，並要求 G log T <= T/2"""
        if T <= 1:
            raise ParameterError(f"window centre T must exceed 1, got {T}")
        truncation = G * math.log(T)
        if not G > 0 or truncation > T / 2:
            raise ParameterError(f"width G={G} violates 0 < G and G·log T <= T/2 at T={T}")
        return cls(G=G, truncation=truncation, sign=sign)

    @property
    def tail_mass(self) -> float:
        """被截掉的正規化質量 erfc(truncation/G)"""
        return math.erfc(self.truncation / self.G)


@dataclass(frozen=True)
class SampledFunction:
    """均勻格點上的取樣函數，以線性內插求值"""
    start: float
    step: float
    values: np.ndarray

    @property
    def end(self) -> float:
        return self.start + self.step * (len(self.values) - 1)

    def covers(self, a: float, b: float) -> bool:
        slack = 1e-9 * max(1.0, abs(self.end))
        return a >= self.start - slack and b <= self.end + slack

    def __call__(self, ts):
        ts = np.asarray(ts, dtype=float)
        if ts.size and not self.covers(float(ts.min()), float(ts.max())):
            raise CoverageError(
                f"samples on [{self.start}, {self.end}] do not cover [{ts.min()}, {ts.max()}]"
            )
        grid = self.start + self.step * np.arange(len(self.values))
        return np.interp(ts, grid, self.values)


@dataclass
class SmoothingCheck:
    """單一方向的平滑檢查結果"""
    lemma: str
    T: float
    G: float
    sign: KernelSign
    lhs: float
    rhs_avg: float
    envelope: float
    passed: bool

    def as_row(self) -> dict:
        return {
            "lemma": self.lemma,
            "T": self.T,
            "G": self.G,
            "sign": self.sign.value,
            "lhs": self.lhs,
            "rhs_avg": self.rhs_avg,
            "envelope": self.envelope,
            "pass": self.passed,
        }


@dataclass
class SmoothingReport:
    """一組 (T, G) 的兩個方向檢查"""
    lemma: str
    T: float
    G: float
    checks: List[SmoothingCheck]
    tail_mass: float
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, sign: KernelSign) -> SmoothingCheck:
        return next(c for c in self.checks if c.sign is sign)
