#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
除數問題資料模型
"""

from dataclasses import dataclass
from enum import Enum


class DeltaRoute(Enum):
    """Δ / Δ* 計算路徑"""
    EXACT = "exact-1.1"
    COMBINATION = "combination-1.3"
    ALTERNATING = "alternating-1.4"
    VORONOI = "voronoi"


@dataclass(frozen=True)
class DeltaValue:
    """單點的 Δ(x) 或 Δ*(x) 值"""
    x: float
    value: float
    route: DeltaRoute

    def as_row(self) -> dict:
        return {"x": self.x, "route": self.route.value, "value": self.value}
