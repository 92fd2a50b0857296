"""
Power moments
Δ、Δ*、E、E* 的動差積分與指數擬合
"""

from .exponent_fit import fit_exponent, fit_power_law, positive_tail
from .models import MomentCheck, MomentEstimate, MomentSuite, Quantity
from .moment_integrals import (
    default_t_min,
    moment_estimate,
    moment_integral,
    moment_integrals,
    t_points,
    verify_moment_suite,
)

__all__ = [
    "fit_exponent",
    "fit_power_law",
    "positive_tail",
    "MomentCheck",
    "MomentEstimate",
    "MomentSuite",
    "Quantity",
    "default_t_min",
    "moment_estimate",
    "moment_integral",
    "moment_integrals",
    "t_points",
    "verify_moment_suite",
]
