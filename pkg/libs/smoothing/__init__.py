"""
Gaussian smoothing
單邊 Gaussian 平均與 E(T)、Δ* 平滑檢查
"""

from .gaussian import check_lemma2, check_lemma3, e_function, gaussian_average
from .models import GaussianKernelSpec, KernelSign, SampledFunction, SmoothingCheck, SmoothingReport

__all__ = [
    "check_lemma2",
    "check_lemma3",
    "e_function",
    "gaussian_average",
    "GaussianKernelSpec",
    "KernelSign",
    "SampledFunction",
    "SmoothingCheck",
    "SmoothingReport",
]
