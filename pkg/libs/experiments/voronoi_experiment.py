"""
Voronoi truncation sweep for Δ and Δ*.
"""

import logging
import math

import numpy as np

from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries
from libs.explicit.voronoi import voronoi_convergence

logger = logging.getLogger(__name__)

# reported window for the RMS shrink per 4× N
SHRINK_WINDOW = (1.4, 2.8)


class VoronoiExperiment(BaseExperiment):
    """RMS error of the truncated Voronoi series against the exact divisor sums."""

    name = "voronoi"
    description = "RMS truncation error of the Voronoi series for Δ and Δ* as N grows"

    def prepare(self, config, resources):
        x_min = config.xmin or 1.0e4
        x_max = config.xmax or 2.0e4
        rng = np.random.default_rng(config.seed)
        self.xs = np.sort(rng.uniform(x_min, x_max, config.points or 200))
        self.Ns = sorted(config.N or [100, 400, 1600, 6400])
        self.table = resources.divisor_table(max(max(self.Ns), math.floor(4 * x_max)) + 1)

    def compute(self) -> ExperimentReport:
        rows = []
        plots = []
        decreasing = {}
        for alternating in (False, True):
            part = voronoi_convergence(self.xs, self.Ns, self.table, alternating=alternating)
            for row in part:
                shrink = row["shrink_ratio"]
                row["in_window"] = (SHRINK_WINDOW[0] <= shrink <= SHRINK_WINDOW[1]
                                    if math.isfinite(shrink) else None)
            quantity = part[0]["quantity"]
            errors = [row["rms_error"] for row in part]
            decreasing[quantity] = all(b < a for a, b in zip(errors, errors[1:]))
            symbol = "Δ*" if alternating else "Δ"
            plots.append(PlotSeries(f"rms_{quantity}",
                                    f"RMS of truncated Voronoi series − exact {symbol}(x)",
                                    "N", "rms_error", self.Ns, errors))
            rows.extend(part)
        summary = {
            "points": int(self.xs.size),
            "x_min": float(self.xs[0]),
            "x_max": float(self.xs[-1]),
            "decreasing_delta": decreasing["delta"],
            "decreasing_delta_star": decreasing["delta_star"],
        }
        return ExperimentReport(command=self.name, rows=rows, plots=plots, summary=summary,
                                passed=all(decreasing.values()))
