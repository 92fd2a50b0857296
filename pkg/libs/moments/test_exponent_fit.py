#!/usr/bin/env python3
"""
log-log 指數擬合測試
"""

import math
import unittest

import numpy as np

from libs.exceptions import DataError, ParameterError
from libs.moments.exponent_fit import fit_exponent, fit_power_law, positive_tail
from libs.moments.models import MomentEstimate, Quantity


class TestExponentFit(unittest.TestCase):
    """擬合測試"""

    def setUp(self):
        """測試前置作業"""
        self.T = np.geomspace(100, 10_000, 12)

    def test_exact_power_law(self):
        """測試純冪次"""
        slope, intercept, rms = fit_power_law(self.T, 7 * self.T ** 1.5)
        self.assertAlmostEqual(slope, 1.5, places=10)
        self.assertAlmostEqual(intercept, math.log(7), places=8)
        self.assertAlmostEqual(rms, 0.0, places=10)

    def test_perturbed_power_law(self):
        """測試含擾動的冪次"""
        values = self.T ** 1.5 * (1 + 0.01 * np.sin(np.log(self.T)))
        slope, _, _ = fit_power_law(self.T, values)
        self.assertLess(abs(slope - 1.5), 0.02)

    def test_estimate_updated(self):
        """測試結果寫回 MomentEstimate"""
        estimate = MomentEstimate(Quantity.DELTA, 2, self.T, 3 * self.T ** 2)
        fit_exponent(estimate)
        self.assertAlmostEqual(estimate.fitted_slope, 2.0, places=10)
        self.assertEqual(len(estimate.rows()), 12)
        self.assertEqual(estimate.rows()[0]["quantity"], "delta")

    def test_rejections(self):
        """測試前置條件"""
        with self.assertRaises(ParameterError):
            fit_power_law([100.0], [1.0])
        with self.assertRaises(ParameterError):
            short = np.geomspace(100, 500, 8)
            fit_power_law(short, short ** 2)
        with self.assertRaises(DataError):
            values = self.T ** 2
            values[3] = 0.0
            fit_power_law(self.T, values)

    def test_positive_tail(self):
        """測試奇次動差只擬合正值尾段"""
        T = np.geomspace(1.0, 1e4, 13)
        values = 7 * T ** 1.75
        values[:2] = [-3.0, -1.0]
        tail_T, tail_values = positive_tail(T, values)
        self.assertEqual(tail_T[0], T[2])
        self.assertEqual(len(tail_values), 11)

        estimate = MomentEstimate(Quantity.DELTA, 3, T, values)
        slope, _, _ = fit_exponent(estimate)
        self.assertAlmostEqual(slope, 1.75, places=10)
        self.assertEqual(estimate.fit_start, T[2])

    def test_late_sign_change(self):
        """測試正值尾段不足十倍時拒絕擬合"""
        values = self.T ** 1.75
        values[7] = -1.0
        estimate = MomentEstimate(Quantity.DELTA, 3, self.T, values)
        with self.assertRaises(DataError):
            fit_exponent(estimate)
        self.assertTrue(math.isnan(estimate.fitted_slope))

    def test_even_power_keeps_all_samples(self):
        """測試偶次動差不截尾"""
        values = self.T ** 2
        values[0] = 0.0
        with self.assertRaises(DataError):
            fit_exponent(MomentEstimate(Quantity.DELTA, 2, self.T, values))

    def test_absolute_odd_power(self):
        """測試絕對值奇次動差使用全部樣本"""
        estimate = MomentEstimate(Quantity.E, 3, self.T, 2 * self.T ** 1.8, absolute=True)
        fit_exponent(estimate)
        self.assertEqual(estimate.fit_start, self.T[0])


if __name__ == "__main__":
    unittest.main()
