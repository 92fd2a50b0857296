#!/usr/bin/env python3
"""
Voronoi 截斷級數測試
"""

import math
import unittest

import numpy as np

from libs.divisor.divisor_table import sieve_divisors
from libs.exceptions import ParameterError
from libs.explicit.voronoi import (
    mollifier_width,
    voronoi_convergence,
    voronoi_delta,
    voronoi_delta_star,
)


class TestVoronoi(unittest.TestCase):
    """Voronoi 級數測試"""

    @classmethod
    def setUpClass(cls):
        """建立除數表"""
        cls.table = sieve_divisors(80_000)
        rng = np.random.default_rng(11)
        cls.xs = rng.integers(10_000, 20_000, size=60) + 0.5

    def test_two_term_instantiation(self):
        """測試 N=2 手算代入"""
        x = 100.0
        by_hand = x ** 0.25 / (math.pi * math.sqrt(2)) * (
            math.cos(4 * math.pi * 10 - math.pi / 4)
            + 2 * 2 ** -0.75 * math.cos(4 * math.pi * math.sqrt(200) - math.pi / 4)
        )
        self.assertAlmostEqual(voronoi_delta(x, 2, self.table).value, by_hand, places=12)
        by_hand_star = x ** 0.25 / (math.pi * math.sqrt(2)) * (
            -math.cos(4 * math.pi * 10 - math.pi / 4)
            + 2 * 2 ** -0.75 * math.cos(4 * math.pi * math.sqrt(200) - math.pi / 4)
        )
        self.assertAlmostEqual(voronoi_delta_star(x, 2, self.table).value, by_hand_star, places=12)

    def test_envelope(self):
        """測試誤差包絡"""
        result = voronoi_delta(10_000.5, 100, self.table)
        self.assertEqual(result.N, 100)
        self.assertAlmostEqual(result.error_envelope, 10_000.5 ** 0.51 / 10.0, places=9)

    def test_larger_truncation_reduces_rms(self):
        """測試截斷越大 RMS 越小"""
        rows = voronoi_convergence(self.xs, [100, 6400], self.table)
        self.assertLess(rows[1]["rms_error"], rows[0]["rms_error"])
        rows_star = voronoi_convergence(self.xs, [100, 6400], self.table, alternating=True)
        self.assertLess(rows_star[1]["rms_error"], rows_star[0]["rms_error"])

    def test_shrink_ratio(self):
        """測試 N 乘 4 時 RMS 的縮小比例與省略項預測一致"""
        rows = voronoi_convergence(self.xs, [400, 1600], self.table)
        self.assertTrue(math.isnan(rows[0]["shrink_ratio"]))
        self.assertGreater(rows[1]["shrink_ratio"], 1.0)
        self.assertLess(rows[1]["shrink_ratio"], 2.8)
        predicted_ratio = rows[0]["predicted_rms"] / rows[1]["predicted_rms"]
        self.assertGreater(predicted_ratio, 1.0)
        self.assertLess(predicted_ratio, math.sqrt(2.0))

    def test_rms_matches_omitted_terms(self):
        """測試 RMS 誤差接近省略項均方預測"""
        for row in voronoi_convergence(self.xs, [100, 1600], self.table):
            self.assertGreater(row["rms_error"] / row["predicted_rms"], 0.5)
            self.assertLess(row["rms_error"] / row["predicted_rms"], 2.0)

    def test_star_error_comparable(self):
        """測試 Δ 與 Δ* 誤差量級相當"""
        plain = voronoi_convergence(self.xs, [400], self.table)[0]["rms_error"]
        star = voronoi_convergence(self.xs, [400], self.table, alternating=True)[0]["rms_error"]
        self.assertLess(star / plain, 4.0)
        self.assertGreater(star / plain, 0.25)

    def test_preconditions(self):
        """測試前置條件"""
        with self.assertRaises(ParameterError):
            voronoi_delta(100.0, 1, self.table)
        with self.assertRaises(ParameterError):
            voronoi_delta(100.0, 101, self.table)
        with self.assertRaises(ParameterError):
            voronoi_delta(1e6, 100_000, self.table)

    def test_mollifier_width(self):
        """測試平滑寬度"""
        self.assertAlmostEqual(mollifier_width(1000.0, 10.0), math.sqrt(100 * math.log(1000)))


if __name__ == "__main__":
    unittest.main()
