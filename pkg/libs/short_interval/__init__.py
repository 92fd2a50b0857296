"""
Short intervals and large values
短區間均方四次方和、十二次動差與二進位大值分類
"""

from .large_values import dyadic_classes, maxima_twelfth_bound, unit_interval_maxima
from .models import DyadicClass, DyadicReport, PointSystem, Theorem2Report
from .point_systems import build_system, greedy_peaks, random_admissible, select_G, uniform_packing
from .short_sums import short_integral, theorem2_sum, twelfth_moment, twelfth_scan

__all__ = [
    "dyadic_classes",
    "maxima_twelfth_bound",
    "unit_interval_maxima",
    "DyadicClass",
    "DyadicReport",
    "PointSystem",
    "Theorem2Report",
    "build_system",
    "greedy_peaks",
    "random_admissible",
    "select_G",
    "uniform_packing",
    "short_integral",
    "theorem2_sum",
    "twelfth_moment",
    "twelfth_scan",
]
