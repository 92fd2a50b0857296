"""
Divisor problem core
除數函數篩法、前綴和與 Δ(x)、Δ*(x) 計算
"""

from .divisor_table import (
    DivisorTable,
    sieve_divisors,
    delta,
    delta_star_combination,
    delta_star_alternating,
    delta_values,
    delta_star_values,
)
from .models import DeltaRoute, DeltaValue

__all__ = [
    "DivisorTable",
    "sieve_divisors",
    "delta",
    "delta_star_combination",
    "delta_star_alternating",
    "delta_values",
    "delta_star_values",
    "DeltaRoute",
    "DeltaValue",
]
