#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
短區間與大值分類資料模型
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config import LAB_CONFIG
from libs.exceptions import SeparationError


@dataclass(frozen=True)
class PointSystem:
    """(T, 2T] 中間距至少 5G 的點列"""
    T: float
    G: float
    points: np.ndarray
    generator: str = "custom"
    epsilon0: Optional[float] = None

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", points)
        eps = LAB_CONFIG["short_interval"]["epsilon0"] if self.epsilon0 is None else self.epsilon0
        slack = 1e-9 * max(1.0, self.T)
        lower = self.T ** (0.2 + eps)
        if not lower * (1 - 1e-9) <= self.G <= self.T:
            raise SeparationError(f"G={self.G} outside [T^(0.2+ε), T] = [{lower:.4g}, {self.T}]")
        if points.size == 0:
            raise SeparationError("point system is empty")
        if points[0] <= self.T or points[-1] > 2 * self.T + slack:
            raise SeparationError(f"points must lie in (T, 2T] = ({self.T}, {2 * self.T}]")
        gaps = np.diff(points)
        if gaps.size and gaps.min() < 5 * self.G - slack:
            raise SeparationError(f"minimum spacing {gaps.min():.6g} is below 5G = {5 * self.G:.6g}")

    @property
    def R(self) -> int:
        return int(self.points.size)


@dataclass
class Theorem2Report:
    """Σ_r (∫_{t_r-G}^{t_r+G}|ζ|²)⁴ 與包絡 T^{2+ε}G^{-2} + RG⁴T^ε"""
    T: float
    G: float
    R: int
    generator: str
    total: float
    envelope: float
    constant: float

    @property
    def ratio(self) -> float:
        return self.total / self.envelope

    @property
    def log_normalized_ratio(self) -> float:
        return self.ratio / math.log(self.T / (2 * math.pi)) ** 4

    @property
    def passed(self) -> bool:
        return self.ratio <= self.constant

    def as_row(self) -> dict:
        return {
            "T": self.T,
            "G": self.G,
            "R": self.R,
            "generator": self.generator,
            "sum": self.total,
            "envelope": self.envelope,
            "ratio": self.ratio,
            "log_normalized_ratio": self.log_normalized_ratio,
            "pass": self.passed,
        }


@dataclass
class DyadicClass:
    """V <= |ζ(½+iτ)| < 2V 的單位區間最大值"""
    V: float
    members: np.ndarray
    values: np.ndarray
    T: float
    epsilon0: float = 0.05

    @property
    def R_V(self) -> int:
        return int(self.members.size)

    @property
    def large_values_ratio(self) -> float:
        """R_V V⁴ / T^{1+ε}"""
        return self.R_V * self.V ** 4 / self.T ** (1 + self.epsilon0)

    @property
    def twelfth_contribution(self) -> float:
        return self.R_V * self.V ** 12

    def as_row(self) -> dict:
        return {
            "T": self.T,
            "V": self.V,
            "R_V": self.R_V,
            "large_values_ratio": self.large_values_ratio,
            "twelfth_contribution": self.twelfth_contribution,
        }


@dataclass
class DyadicReport:
    """全部分類與低於 log T 的個數"""
    T: float
    threshold: float
    window_count: int
    below: int
    classes: List[DyadicClass] = field(default_factory=list)

    @property
    def largest_value(self) -> float:
        values = [c.values.max() for c in self.classes if c.R_V]
        return float(max(values)) if values else 0.0
