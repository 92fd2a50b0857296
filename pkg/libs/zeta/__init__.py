"""
Critical-line zeta evaluation
ζ(½+it) 計算、|ζ|² 取樣網格與 E(T)、E*(t)
"""

from .models import ERoute, EValue, MethodTag
from .riemann_siegel import hardy_z, theta, zeta_half
from .sample_grid import E, E_star, E_values, ZetaSampleGrid, build_grid, mean_square_integral

__all__ = [
    "ERoute",
    "EValue",
    "MethodTag",
    "hardy_z",
    "theta",
    "zeta_half",
    "E",
    "E_star",
    "E_values",
    "ZetaSampleGrid",
    "build_grid",
    "mean_square_integral",
]
