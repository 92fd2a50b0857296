"""
Short-interval commands: short-interval and twelfth.
"""

import logging

from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries
from libs.short_interval.large_values import dyadic_classes, maxima_twelfth_bound
from libs.short_interval.point_systems import GENERATORS, build_system, select_G
from libs.short_interval.short_sums import holder_chain, ratio_trend, theorem2_sum, twelfth_scan

logger = logging.getLogger(__name__)


class ShortIntervalExperiment(BaseExperiment):
    """Fourth-power sums of short mean squares over separated point systems."""

    name = "short-interval"
    description = "Σ_r (∫_{t_r−G}^{t_r+G}|ζ|²)⁴ against T^{2+ε}G^{−2} + RG⁴T^ε per generator"

    def prepare(self, config, resources):
        self.Ts = sorted(config.T or [1000.0])
        self.generators = config.generator or list(GENERATORS)
        self.epsilon0 = config.epsilon0
        self.strategy = config.g_strategy
        self.V = config.V
        self.seed = config.seed
        self.dyadic = config.dyadic
        self.refine = config.refine
        self.grid = resources.zeta_grid(2.0 * self.Ts[-1] + 1.0)

    def compute(self) -> ExperimentReport:
        reports = []
        for T in self.Ts:
            G = select_G(T, self.strategy, self.V, self.epsilon0)
            for name in self.generators:
                system = build_system(name, T, G, self.grid, self.seed)
                reports.append(theorem2_sum(system, self.grid, self.epsilon0))
        rows = [report.as_row() for report in reports]
        passed = all(report.passed for report in reports)
        summary = {"T_values": self.Ts, "g_strategy": self.strategy}
        plots = []
        for name in self.generators:
            mine = [r for r in reports if r.generator == name]
            plots.append(PlotSeries(f"ratio_{name}", f"short-interval fourth-power sum / envelope ({name})",
                                    "T", "ratio", [r.T for r in mine], [r.ratio for r in mine]))
            if len(mine) >= 2:
                trend = ratio_trend(mine)
                summary[f"trend_slope_{name}"] = trend["slope"]
                summary[f"trend_pass_{name}"] = trend["pass"]
                summary[f"normalized_trend_slope_{name}"] = ratio_trend(mine, normalized=True)["slope"]
                passed = passed and trend["pass"]

        tables = {}
        if self.dyadic:
            class_rows = []
            bound_rows = []
            for T in self.Ts:
                report = dyadic_classes(T, self.grid, self.refine, self.epsilon0)
                class_rows.extend(c.as_row() for c in report.classes)
                summary[f"below_log_T_T{T:g}"] = report.below
                summary[f"largest_value_T{T:g}"] = report.largest_value
                summary[f"largest_over_T_sixth_T{T:g}"] = report.largest_value / T ** (1.0 / 6.0)
                bound_rows.append(maxima_twelfth_bound(T, self.grid, self.refine))
            tables["dyadic"] = class_rows
            tables["maxima"] = bound_rows
        return ExperimentReport(command=self.name, rows=rows, tables=tables, plots=plots,
                                summary=summary, passed=passed)


class TwelfthExperiment(BaseExperiment):
    """∫₀ᵀ|ζ|¹² growth and the power-mean chain."""

    name = "twelfth"
    description = "twelfth moment of |ζ(½+it)| with its fitted exponent"

    def prepare(self, config, resources):
        self.Ts = sorted(config.T or [500.0, 1000.0, 2000.0, 4000.0])
        self.maxima = config.maxima
        self.refine = config.refine
        t_end = 2.0 * self.Ts[-1] + 1.0 if self.maxima else self.Ts[-1]
        self.grid = resources.zeta_grid(t_end)

    def compute(self) -> ExperimentReport:
        scan = twelfth_scan(self.Ts, self.grid)
        rows = scan["rows"]
        T_max = self.Ts[-1]
        chain = holder_chain(T_max, self.grid)
        holder_ok = (chain["fourth"] >= chain["fourth_lower"]
                     and chain["twelfth"] >= chain["twelfth_lower"])
        summary = {
            "fitted_slope": scan["slope"],
            "slope_limit": scan["limit"],
            "slope_pass": scan["pass"],
            "holder_pass": holder_ok,
        }
        summary.update({f"holder_{key}": value for key, value in chain.items()})
        tables = {}
        if self.maxima:
            tables["maxima"] = [maxima_twelfth_bound(T, self.grid, self.refine) for T in self.Ts]
        plot = PlotSeries("twelfth", "∫₀ᵀ |ζ(½+it)|¹² dt", "T", "integral",
                          [r["T"] for r in rows], [r["integral"] for r in rows])
        passed = scan["pass"] and holder_ok
        if not scan["pass"]:
            logger.warning(f"Twelfth-moment slope {scan['slope']:.3f} above {scan['limit']}")
        return ExperimentReport(command=self.name, rows=rows, tables=tables, plots=[plot],
                                summary=summary, passed=passed)

