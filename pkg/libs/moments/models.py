#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
動差估計資料模型
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np


class Quantity(Enum):
    """被積分的誤差項"""
    DELTA = "delta"
    DELTA_STAR = "delta_star"
    E = "E"
    E_STAR = "E_star"

    @property
    def is_divisor_family(self) -> bool:
        return self in (Quantity.DELTA, Quantity.DELTA_STAR)


@dataclass
class MomentEstimate:
    """(T, ∫ quantity^k) 樣本與 log-log 擬合結果"""
    quantity: Quantity
    power: int
    T: np.ndarray
    integrals: np.ndarray
    fitted_slope: float = math.nan
    fitted_intercept: float = math.nan
    residual_rms: float = math.nan
    absolute: bool = False
    # first T of the fitted samples; odd powers fit only where the integral is positive
    fit_start: float = math.nan

    def __post_init__(self):
        self.T = np.asarray(self.T, dtype=float)
        self.integrals = np.asarray(self.integrals, dtype=float)

    @property
    def samples(self) -> List[Tuple[float, float]]:
        return list(zip(self.T.tolist(), self.integrals.tolist()))

    @property
    def label(self) -> str:
        base = f"|{self.quantity.value}|" if self.absolute else self.quantity.value
        return f"{base}^{self.power}"

    def rows(self) -> List[Dict]:
        return [
            {"quantity": self.quantity.value, "k": self.power, "T": t, "integral": v}
            for t, v in self.samples
        ]


@dataclass
class MomentCheck:
    """單一斜率或常數檢查"""
    name: str
    observed: float
    expected: float
    tolerance: float
    passed: bool
    note: str = ""
    # reported with its flag, left out of the suite verdict
    advisory: bool = False

    def as_row(self) -> dict:
        return {
            "check": self.name,
            "observed": self.observed,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "advisory": self.advisory,
            "note": self.note,
        }


@dataclass
class MomentSuite:
    """整組動差驗證結果"""
    estimates: List[MomentEstimate]
    checks: List[MomentCheck]
    extras: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if not check.advisory)

    def estimate(self, quantity: Quantity, power: int, absolute: bool = False) -> Optional[MomentEstimate]:
        for item in self.estimates:
            if item.quantity is quantity and item.power == power and item.absolute == absolute:
                return item
        return None
