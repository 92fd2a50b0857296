"""
Quadruple counting
k 次方根四元組的精確計數
"""

from .models import QuadrupleReport
from .quadruple_count import brute_force_count, count_quadruples, verify_lemma1

__all__ = ["QuadrupleReport", "brute_force_count", "count_quadruples", "verify_lemma1"]
