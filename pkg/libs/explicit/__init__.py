"""
Explicit formulas
Voronoi 截斷級數與 Atkinson 公式
"""

from .atkinson import arsinh, atkinson_E, atkinson_components, e_atkinson, f_atkinson
from .models import AtkinsonParams, SeriesResult
from .voronoi import mollifier_width, voronoi_convergence, voronoi_delta, voronoi_delta_star

__all__ = [
    "arsinh",
    "atkinson_E",
    "atkinson_components",
    "e_atkinson",
    "f_atkinson",
    "AtkinsonParams",
    "SeriesResult",
    "mollifier_width",
    "voronoi_convergence",
    "voronoi_delta",
    "voronoi_delta_star",
]
