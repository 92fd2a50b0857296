"""
Power-moment command: one (quantity, k) fit or the whole suite.
"""

import logging

from config import LAB_CONFIG
from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport, PlotSeries
from libs.exceptions import DataError
from libs.moments.exponent_fit import fit_exponent
from libs.moments.models import Quantity
from libs.moments.moment_integrals import EXPECTED_SLOPES, moment_estimate, slope_check, verify_moment_suite

logger = logging.getLogger(__name__)

_SYMBOLS = {Quantity.DELTA: "Δ", Quantity.DELTA_STAR: "Δ*", Quantity.E: "E", Quantity.E_STAR: "E*"}


def _fits(quantity: Quantity, k: int, absolute: bool) -> bool:
    """Whether the integrals stay positive so a log-log fit makes sense."""
    if absolute or k % 2 == 0:
        return True
    return (quantity, k) in EXPECTED_SLOPES


class MomentsExperiment(BaseExperiment):
    """∫ quantity^k at geometric T with the fitted exponent."""

    name = "moments"
    description = "moment integrals of Δ, Δ*, E, E* and their log-log exponents"

    def prepare(self, config, resources):
        cfg = LAB_CONFIG["moments"]
        self.suite = config.suite
        self.delta_t_max = config.tmax or cfg["delta_t_max"]
        self.e_t_max = config.e_tmax or cfg["e_t_max"]
        if not self.suite:
            self.quantity = Quantity(config.quantity)
            self.power = config.power
            self.absolute = config.absolute
            default_max = cfg["delta_t_max"] if self.quantity.is_divisor_family else cfg["e_t_max"]
            self.t_max = config.tmax or default_max
            self.t_min = config.tmin

    def compute(self) -> ExperimentReport:
        if self.suite:
            return self._compute_suite()
        estimate = moment_estimate(self.quantity, self.power, self.t_max, self.resources,
                                   t_min=self.t_min, absolute=self.absolute, fit=False)
        if _fits(self.quantity, self.power, self.absolute):
            try:
                fit_exponent(estimate)
            except DataError as exc:
                if self.power % 2 == 0 or self.absolute:
                    raise
                logger.warning(f"No exponent for {estimate.label}: {exc}")
        summary = {
            "quantity": self.quantity.value,
            "power": self.power,
            "absolute": self.absolute,
            "t_max": self.t_max,
            "fit_start": estimate.fit_start,
            "fitted_slope": estimate.fitted_slope,
            "fitted_intercept": estimate.fitted_intercept,
            "residual_rms": estimate.residual_rms,
        }
        passed = True
        if not self.absolute and (self.quantity, self.power) in EXPECTED_SLOPES:
            check = slope_check(estimate)
            summary.update({"expected_slope": check.expected, "tolerance": check.tolerance,
                            "pass": check.passed, "advisory": check.advisory})
            passed = check.passed or check.advisory
        symbol = _SYMBOLS[self.quantity]
        plot = PlotSeries("integral", f"∫ {symbol}^{self.power} up to T", "T", "integral",
                          estimate.T.tolist(), estimate.integrals.tolist())
        return ExperimentReport(command=self.name, rows=estimate.rows(), plots=[plot],
                                summary=summary, passed=passed)

    def _compute_suite(self) -> ExperimentReport:
        suite = verify_moment_suite(self.resources, delta_t_max=self.delta_t_max, e_t_max=self.e_t_max)
        fits = [{
            "quantity": e.quantity.value,
            "k": e.power,
            "fit_start": e.fit_start,
            "fitted_slope": e.fitted_slope,
            "fitted_intercept": e.fitted_intercept,
            "residual_rms": e.residual_rms,
        } for e in suite.estimates]
        samples = [row for e in suite.estimates for row in e.rows()]
        plots = [
            PlotSeries(f"{e.quantity.value}_{e.power}", f"∫ {_SYMBOLS[e.quantity]}^{e.power} up to T",
                       "T", "integral", e.T.tolist(), e.integrals.tolist())
            for e in suite.estimates
        ]
        summary = dict(suite.extras)
        summary.update({"delta_t_max": self.delta_t_max, "e_t_max": self.e_t_max})
        return ExperimentReport(command=self.name, rows=[c.as_row() for c in suite.checks],
                                tables={"fits": fits, "samples": samples}, plots=plots,
                                summary=summary, passed=suite.passed)
