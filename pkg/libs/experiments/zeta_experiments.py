"""
Mean-square commands: estar and atkinson.
"""

import logging
import math

import numpy as np

from config import LAB_CONFIG
from libs.divisor.divisor_table import delta_star_values
from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries
from libs.explicit.atkinson import atkinson_components, atkinson_envelope
from libs.explicit.models import AtkinsonParams
from libs.zeta.sample_grid import E_values

logger = logging.getLogger(__name__)


class EStarExperiment(BaseExperiment):
    """E(t), 2πΔ*(t/2π) and E*(t) at chosen or evenly spaced t."""

    name = "estar"
    description = "E*(t) = E(t) − 2πΔ*(t/2π) from the zeta grid and the divisor table"

    def prepare(self, config, resources):
        if config.T:
            self.ts = np.array(sorted(config.T))
        else:
            t_min = config.tmin or 10.0
            t_max = config.tmax or 1000.0
            self.ts = np.linspace(t_min, t_max, config.points or 200)
        t_end = float(self.ts[-1])
        self.grid = resources.zeta_grid(t_end)
        self.table = resources.divisor_table(math.floor(4.0 * t_end / (2.0 * math.pi)) + 1)

    def compute(self) -> ExperimentReport:
        e = E_values(self.ts, self.grid)
        star = 2.0 * math.pi * delta_star_values(self.ts / (2.0 * math.pi), self.table)
        e_star = e - star
        rows = [{"t": float(t), "E": float(a), "two_pi_delta_star": float(b), "E_star": float(c)}
                for t, a, b, c in zip(self.ts, e, star, e_star)]
        plot = PlotSeries("E_star", "E*(t) = E(t) − 2πΔ*(t/2π)", "t", "E_star",
                          self.ts.tolist(), e_star.tolist())
        summary = {
            "rms_E": float(np.sqrt(np.mean(e ** 2))),
            "rms_E_star": float(np.sqrt(np.mean(e_star ** 2))),
            "mean_E_star": float(np.mean(e_star)),
        }
        return ExperimentReport(command=self.name, rows=rows, plots=[plot], summary=summary)


class AtkinsonExperiment(BaseExperiment):
    """Σ₁ + Σ₂ against the quadrature value of E(T)."""

    name = "atkinson"
    description = "Atkinson's explicit formula for E(T) against the quadrature route"

    def prepare(self, config, resources):
        if config.T:
            self.Ts = np.array(sorted(config.T))
        else:
            self.Ts = np.geomspace(config.tmin or 100.0, config.tmax or 5000.0, config.points or 50)
        self.ratio = config.n_ratio or 1.0
        self.constant = LAB_CONFIG["explicit"]["atkinson_constant"]
        self.grid = resources.zeta_grid(float(self.Ts[-1]))
        self.table = resources.divisor_table(int(math.floor(self.ratio * self.Ts[-1])) + 1)

    def compute(self) -> ExperimentReport:
        quadrature = E_values(self.Ts, self.grid)
        rows = []
        for T, e_quad in zip(self.Ts.tolist(), quadrature.tolist()):
            params = AtkinsonParams.from_truncation(T, self.ratio * T)
            sigma1, sigma2 = atkinson_components(T, params, self.table)
            gap = abs(sigma1 + sigma2 - e_quad)
            envelope = atkinson_envelope(T, self.constant)
            rows.append({
                "T": T,
                "N": params.N,
                "N_prime": params.N_prime,
                "sigma1": sigma1,
                "sigma2": sigma2,
                "E_atkinson": sigma1 + sigma2,
                "E_quadrature": e_quad,
                "gap": gap,
                "envelope": envelope,
                "pass": gap <= envelope,
            })
        plot = PlotSeries("gap", "|E_atkinson(T) − E_quadrature(T)| / log²T", "T", "gap_over_log2T",
                          [r["T"] for r in rows], [r["gap"] / math.log(r["T"]) ** 2 for r in rows])
        summary = {
            "n_ratio": self.ratio,
            "max_gap_over_log2T": max(r["gap"] / math.log(r["T"]) ** 2 for r in rows),
            "constant": self.constant,
        }
        return ExperimentReport(command=self.name, rows=rows, plots=[plot], summary=summary,
                                passed=all(r["pass"] for r in rows))
