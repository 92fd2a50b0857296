"""
Divisor-sum commands: sieve and delta.
"""

import logging
import math

import numpy as np

from libs.divisor.divisor_table import (
    cross_route_gap,
    delta,
    delta_star_alternating,
    delta_star_combination,
    delta_values,
    hyperbola_sum,
)
from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries

logger = logging.getLogger(__name__)

DELTA_HEADER = "Δ(x) = Σ_{n≤x} d(n) − x(log x + 2γ − 1) − 1/4"
DELTA_STAR_HEADER = "Δ*(x) = −Δ(x) + 2Δ(2x) − ½Δ(4x)"


class SieveExperiment(BaseExperiment):
    """Build (or load) the divisor table and validate it by the hyperbola identity."""

    name = "sieve"
    description = "build the divisor table d(1..limit) and check Σd(n) by the hyperbola method"

    def prepare(self, config, resources):
        self.limit = config.limit or 10 ** 6
        self.table = resources.divisor_table(self.limit)

    def compute(self) -> ExperimentReport:
        limit = self.limit
        expected = hyperbola_sum(limit)
        observed = int(self.table.prefix[limit])
        row = {
            "limit": limit,
            "divisor_sum": observed,
            "hyperbola_sum": expected,
            "alternating_sum": int(self.table.alternating_prefix[limit]),
            "max_d": int(self.table.d[1:limit + 1].max()),
            "pass": observed == expected,
        }
        xs = np.unique(np.floor(np.geomspace(1.0, limit, 200))) + 0.5
        xs = xs[xs <= limit]
        plot = PlotSeries("delta", DELTA_HEADER, "x", "Delta", xs.tolist(),
                          delta_values(xs, self.table).tolist())
        return ExperimentReport(command=self.name, rows=[row], plots=[plot],
                                summary={"limit": limit, "table_limit": self.table.limit},
                                passed=row["pass"])


class DeltaExperiment(BaseExperiment):
    """Δ(x) and both Δ*(x) routes with their cross-route gap."""

    name = "delta"
    description = "Δ(x), Δ*(x) by the combination and alternating routes"

    def prepare(self, config, resources):
        if config.x:
            self.xs = sorted(float(x) for x in config.x)
        else:
            rng = np.random.default_rng(config.seed)
            x_max = config.xmax or 1.0e4
            # half-integer offsets keep x away from the jumps of the divisor sums
            self.xs = sorted((rng.integers(1, int(x_max), size=config.random) + 0.5).tolist())
        needed = math.floor(4 * max(self.xs))
        self.table = resources.divisor_table(max(config.limit or 0, needed))

    def compute(self) -> ExperimentReport:
        rows = []
        for x in self.xs:
            gap, ok = cross_route_gap(x, self.table)
            rows.append({
                "x": x,
                "delta": delta(x, self.table).value,
                "delta_star_combination": delta_star_combination(x, self.table).value,
                "delta_star_alternating": delta_star_alternating(x, self.table).value,
                "gap": gap,
                "pass": ok,
            })
        worst = max(row["gap"] for row in rows)
        plot = PlotSeries("delta_star", DELTA_STAR_HEADER, "x", "Delta_star",
                          [r["x"] for r in rows], [r["delta_star_combination"] for r in rows])
        return ExperimentReport(command=self.name, rows=rows, plots=[plot],
                                summary={"points": len(rows), "max_gap": worst},
                                passed=all(row["pass"] for row in rows))
