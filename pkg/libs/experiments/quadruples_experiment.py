"""
Quadruple counting command.
"""

import logging

from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries
from libs.quadruples.quadruple_count import brute_force_count, count_quadruples, verify_lemma1

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_N = 40


class QuadruplesExperiment(BaseExperiment):
    """Counts of |n₁^{1/k} + n₂^{1/k} − n₃^{1/k} − n₄^{1/k}| < δ against N²+N⁴δ."""

    name = "quadruples"
    description = "sorted pair-sum counting of near-coincident root sums"

    def prepare(self, config, resources):
        self.sweep = config.sweep
        # a sweep narrows only the axes given explicitly
        self.sweep_axes = (config.N, config.k, config.delta)
        self.Ns = config.N or [128]
        self.ks = config.k or [2]
        self.deltas = config.delta or [0.01]
        self.epsilon0 = config.epsilon0
        self.brute = config.brute

    def compute(self) -> ExperimentReport:
        if self.sweep:
            N_list, k_list, delta_grid = self.sweep_axes
            reports = verify_lemma1(N_list, k_list, delta_grid, epsilon0=self.epsilon0)
        else:
            reports = [count_quadruples(int(N), int(k), float(delta), epsilon0=self.epsilon0)
                       for k in self.ks for N in self.Ns for delta in self.deltas]
        rows = [report.as_row() for report in reports]
        passed = all(report.passed for report in reports)
        if self.brute:
            for row, report in zip(rows, reports):
                if report.N <= BRUTE_FORCE_MAX_N:
                    brute = brute_force_count(report.N, report.k, report.delta)
                    row["brute_force"] = brute
                    exact = report.count - report.ties <= brute <= report.count
                    row["brute_force_match"] = exact
                    passed = passed and exact
        first = reports[0]
        chosen = sorted((r for r in reports if r.N == first.N and r.k == first.k), key=lambda r: r.delta)
        plot = PlotSeries("count", f"quadruple count at N={first.N}, k={first.k}",
                          "delta", "count", [r.delta for r in chosen], [r.count for r in chosen])
        summary = {"runs": len(rows), "max_ratio": max(r.ratio for r in reports)}
        return ExperimentReport(command=self.name, rows=rows, plots=[plot], summary=summary, passed=passed)
