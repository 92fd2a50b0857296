#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
實驗結果資料模型
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence


@dataclass
class PlotSeries:
    """兩欄繪圖資料，header 為公式說明"""
    name: str
    header: str
    x_label: str
    y_label: str
    x: Sequence[float]
    y: Sequence[float]

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ValueError(f"plot series '{self.name}' has {len(self.x)} x and {len(self.y)} y values")


@dataclass
class ExperimentReport:
    """一次實驗的主要表格、附加表格、摘要與繪圖序列"""
    command: str
    rows: List[Dict[str, Any]]
    summary: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    plots: List[PlotSeries] = field(default_factory=list)
    passed: bool = True

    @property
    def row_count(self) -> int:
        return len(self.rows) + sum(len(rows) for rows in self.tables.values())
