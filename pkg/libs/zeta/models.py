#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Zeta 計算資料模型
"""

from dataclasses import dataclass
from enum import Enum


class MethodTag(Enum):
    """|ζ(½+it)|² 取樣方法"""
    EULER_MACLAURIN = "euler-maclaurin"
    RIEMANN_SIEGEL = "riemann-siegel"


class ERoute(Enum):
    """E(T) 計算路徑"""
    QUADRATURE = "quadrature-1.2"
    ATKINSON = "atkinson-2.5"


@dataclass(frozen=True)
class EValue:
    """單點 E(T) 值"""
    T: float
    value: float
    route: ERoute

    def as_row(self) -> dict:
        return {"T": self.T, "route": self.route.value, "value": self.value}
