#!/usr/bin/env python3
"""
ExperimentManager 與實驗流程測試
"""

import unittest

from libs.experiment_manager import ExperimentManager
from libs.experiments.base_experiment import BaseExperiment
from libs.resources import LabResources
from models.run_config import Command, RunConfig


class TestExperimentManager(unittest.TestCase):
    """實驗註冊測試"""

    def setUp(self):
        """測試前置作業"""
        self.manager = ExperimentManager()

    def test_every_command_registered(self):
        """測試每個命令都有實驗"""
        self.assertEqual(self.manager.list_experiments(), sorted(c.value for c in Command))

    def test_instances(self):
        """測試建立實驗實例"""
        experiment = self.manager.get_experiment("sieve")
        self.assertIsInstance(experiment, BaseExperiment)
        self.assertIsNot(experiment, self.manager.get_experiment("sieve"))
        self.assertIsNone(self.manager.get_experiment("spiral"))
        self.assertFalse(self.manager.get_experiment("history").writes_reports)

    def test_missing_directory(self):
        """測試目錄不存在"""
        self.assertEqual(ExperimentManager("/nonexistent/experiments").list_experiments(), [])


class TestExperimentRuns(unittest.TestCase):
    """實驗三階段流程測試"""

    def setUp(self):
        """測試前置作業"""
        self.manager = ExperimentManager()
        self.resources = LabResources(use_cache=False)

    def run_command(self, command, **values):
        config = RunConfig.from_sources(command, values)
        return self.manager.get_experiment(command).run(config, self.resources)

    def test_sieve(self):
        """測試 sieve 實驗"""
        report = self.run_command("sieve", limit=5000)
        self.assertTrue(report.passed)
        self.assertEqual(report.rows[0]["divisor_sum"], report.rows[0]["hyperbola_sum"])
        self.assertEqual(report.plots[0].name, "delta")

    def test_estar(self):
        """測試 estar 實驗"""
        report = self.run_command("estar", tmin=50.0, tmax=300.0, points=11)
        self.assertEqual(len(report.rows), 11)
        row = report.rows[-1]
        self.assertAlmostEqual(row["E_star"], row["E"] - row["two_pi_delta_star"], places=9)

    def test_atkinson(self):
        """測試 atkinson 實驗"""
        report = self.run_command("atkinson", T=[200.0, 400.0])
        self.assertEqual(len(report.rows), 2)
        self.assertTrue(report.passed)

    def test_voronoi(self):
        """測試 voronoi 實驗"""
        report = self.run_command("voronoi", N=[50, 3200], xmin=4000.0, xmax=6000.0, points=40)
        self.assertEqual(len(report.rows), 4)
        self.assertTrue(report.summary["decreasing_delta"])
        self.assertEqual(len(report.plots), 2)

    def test_smooth(self):
        """測試 smooth 實驗"""
        report = self.run_command("smooth", T=[600.0], G=[3.0])
        self.assertEqual(len(report.rows), 4)
        self.assertTrue(report.passed)
        self.assertEqual({r["family"] for r in report.rows}, {"E", "delta_star"})

    def test_moments(self):
        """測試 moments 實驗"""
        report = self.run_command("moments", quantity="delta", power=2, tmax=20000.0)
        self.assertAlmostEqual(report.summary["fitted_slope"], 1.5, delta=0.1)
        self.assertEqual(report.rows[0]["quantity"], "delta")

    def test_moments_signed_cube(self):
        """測試 ∫Δ³ 單次執行得到斜率"""
        report = self.run_command("moments", quantity="delta", power=3, tmax=20000.0)
        self.assertGreater(report.summary["fitted_slope"], 1.5)
        self.assertLess(report.summary["fitted_slope"], 2.0)
        self.assertGreaterEqual(report.summary["fit_start"], 2000.0)
        self.assertFalse(report.summary["advisory"])

    def test_moments_advisory_slope(self):
        """測試 E 斜率僅供參考不判失敗"""
        report = self.run_command("moments", quantity="E", power=2, tmax=1000.0)
        self.assertTrue(report.summary["advisory"])
        self.assertTrue(report.passed)

    def test_quadruple_sweep_axes(self):
        """測試掃描沿用指定的 N、k、δ 與 ε"""
        report = self.run_command("quadruples", sweep=True, N=[32, 64], k=[3], delta=[0.01], epsilon0=0.1)
        self.assertEqual([(row["N"], row["k"]) for row in report.rows], [(32, 3), (64, 3)])
        self.assertEqual(report.summary["runs"], 2)

    def test_twelfth(self):
        """測試 twelfth 實驗"""
        report = self.run_command("twelfth", T=[200.0, 400.0])
        self.assertTrue(report.summary["holder_pass"])
        self.assertEqual(len(report.rows), 2)

    def test_short_interval_dyadic(self):
        """測試 short-interval 實驗的二進位分類"""
        report = self.run_command("short-interval", T=[200.0], generator=["uniform", "random"], dyadic=True)
        self.assertEqual(len(report.rows), 2)
        total = sum(row["R_V"] for row in report.tables["dyadic"]) + report.summary["below_log_T_T200"]
        self.assertEqual(total, 200)
        self.assertEqual(len(report.tables["maxima"]), 1)


if __name__ == "__main__":
    unittest.main()
