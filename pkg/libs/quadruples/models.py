#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
四元組計數資料模型
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadrupleReport:
    """(N, k, δ) 的精確計數與包絡 N^ε(N⁴δ + N²)"""
    N: int
    k: int
    delta: float
    count: int
    envelope: float
    ties: int = 0
    passed: bool = True

    @property
    def ratio(self) -> float:
        return self.count / self.envelope

    @property
    def diagonal(self) -> int:
        """{n₁,n₂} = {n₃,n₄} 的有序解個數"""
        return 2 * self.N * self.N - self.N

    def as_row(self) -> dict:
        return {
            "N": self.N,
            "k": self.k,
            "delta": self.delta,
            "count": self.count,
            "envelope": self.envelope,
            "ratio": self.ratio,
            "ties": self.ties,
            "pass": self.passed,
        }
