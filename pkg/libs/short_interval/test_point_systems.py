#!/usr/bin/env python3
"""
點列產生器測試
"""

import unittest

import numpy as np

from libs.exceptions import ParameterError, SeparationError
from libs.short_interval.models import PointSystem
from libs.short_interval.point_systems import (
    build_system,
    greedy_peaks,
    max_points,
    random_admissible,
    select_G,
    uniform_packing,
)
from libs.zeta.sample_grid import build_grid


class TestPointSystem(unittest.TestCase):
    """PointSystem 驗證測試"""

    def test_valid_system(self):
        """測試合法點列"""
        system = PointSystem(T=1000.0, G=10.0, points=[1010.0, 1060.0, 1200.0])
        self.assertEqual(system.R, 3)

    def test_spacing_violation(self):
        """測試間距不足"""
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=10.0, points=[1010.0, 1049.0])

    def test_points_outside_block(self):
        """測試點落在 (T, 2T] 之外"""
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=10.0, points=[1000.0, 1100.0])
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=10.0, points=[1500.0, 2000.5])

    def test_G_range(self):
        """測試 G 的範圍"""
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=1.0, points=[1500.0])
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=1001.0, points=[1500.0])
        with self.assertRaises(SeparationError):
            PointSystem(T=1000.0, G=10.0, points=[])


class TestGenerators(unittest.TestCase):
    """產生器測試"""

    @classmethod
    def setUpClass(cls):
        """建立共用網格"""
        cls.T = 200.0
        cls.grid = build_grid(410.0, step=0.02)

    def assertAdmissible(self, system):
        gaps = np.diff(system.points)
        if gaps.size:
            self.assertGreaterEqual(gaps.min(), 5 * system.G - 1e-9)
        self.assertGreaterEqual(system.points[0] - system.G, system.T - 1e-9)
        self.assertLessEqual(system.points[-1] + system.G, 2 * system.T + 1e-9)

    def test_uniform_packing(self):
        """測試均勻排列為最大排列"""
        G = select_G(self.T)
        system = uniform_packing(self.T, G)
        self.assertAdmissible(system)
        self.assertEqual(system.R, max_points(self.T, G))
        self.assertGreater(system.points[-1] + 5 * G + G, 2 * self.T)
        np.testing.assert_allclose(np.diff(system.points), 5 * G)

    def test_random_is_reproducible(self):
        """測試固定種子可重現"""
        G = select_G(self.T)
        a = random_admissible(self.T, G, seed=7)
        b = random_admissible(self.T, G, seed=7)
        c = random_admissible(self.T, G, seed=8)
        np.testing.assert_array_equal(a.points, b.points)
        self.assertFalse(np.array_equal(a.points, c.points))
        self.assertAdmissible(a)
        self.assertEqual(a.R, max_points(self.T, G) // 2)

    def test_random_R_bounds(self):
        """測試 R 超出範圍"""
        G = select_G(self.T)
        with self.assertRaises(ParameterError):
            random_admissible(self.T, G, R=max_points(self.T, G) + 1)

    def test_greedy_peaks(self):
        """測試峰值貪婪選點"""
        G = select_G(self.T)
        system = greedy_peaks(self.T, G, self.grid)
        self.assertAdmissible(system)
        times = self.grid.times
        mask = (times >= self.T + G) & (times <= 2 * self.T - G)
        top = times[mask][np.argmax(self.grid.values[mask])]
        self.assertTrue(np.any(np.isclose(system.points, top)))

    def test_select_G(self):
        """測試 G 的選擇策略"""
        self.assertAlmostEqual(select_G(10000.0), 10.0)
        small = select_G(10000.0, "large-values", V=0.1)
        self.assertAlmostEqual(small, 10000.0 ** 0.25)
        big = select_G(10000.0, "large-values", V=20.0)
        self.assertAlmostEqual(big, 400.0 * 10000.0 ** -0.1)
        with self.assertRaises(ParameterError):
            select_G(10000.0, "large-values")
        with self.assertRaises(ParameterError):
            select_G(10000.0, "unknown")

    def test_build_system(self):
        """測試產生器分派"""
        G = select_G(self.T)
        self.assertEqual(build_system("uniform", self.T, G).generator, "uniform")
        self.assertEqual(build_system("greedy-peaks", self.T, G, self.grid).generator, "greedy-peaks")
        with self.assertRaises(ParameterError):
            build_system("greedy-peaks", self.T, G)
        with self.assertRaises(ParameterError):
            build_system("spiral", self.T, G)


if __name__ == "__main__":
    unittest.main()
