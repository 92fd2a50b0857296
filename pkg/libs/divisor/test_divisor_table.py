#!/usr/bin/env python3
"""
DivisorTable 測試套件
"""

import math
import unittest

import numpy as np

from config import EULER_GAMMA
from libs.divisor.divisor_table import (
    cross_route_gap,
    delta,
    delta_star_alternating,
    delta_star_combination,
    delta_star_values,
    delta_values,
    divisor_square_constant,
    divisor_square_series,
    hyperbola_sum,
    sieve_divisors,
)
from libs.divisor.models import DeltaRoute
from libs.exceptions import ParameterError, SizingError, TableUnderflowError


class TestSieve(unittest.TestCase):
    """篩法測試"""

    def test_small_values(self):
        """測試小範圍 d(n)"""
        self.assertEqual(int(sieve_divisors(12).d[12]), 6)
        self.assertEqual(int(sieve_divisors(10).prefix[10]), 27)
        self.assertEqual(int(sieve_divisors(97).d[97]), 2)

    def test_against_double_loop(self):
        """測試與雙重迴圈枚舉一致"""
        limit = 300
        table = sieve_divisors(limit)
        expected = [0] * (limit + 1)
        for i in range(1, limit + 1):
            for j in range(i, limit + 1, i):
                expected[j] += 1
        self.assertEqual(table.d.tolist(), expected)
        self.assertEqual(int(table.d[1]), 1)
        self.assertTrue(np.array_equal(np.diff(table.prefix), table.d[1:]))

    def test_primes_have_two_divisors(self):
        """測試質數 d(p) = 2"""
        table = sieve_divisors(200)
        for p in (2, 3, 5, 7, 11, 101, 197, 199):
            self.assertEqual(int(table.d[p]), 2)

    def test_hyperbola_identity(self):
        """測試雙曲線恆等式"""
        for limit in (1, 2, 10, 1000, 12345):
            table = sieve_divisors(limit)
            self.assertEqual(int(table.prefix[limit]), hyperbola_sum(limit))
            brute = sum(limit // n for n in range(1, limit + 1))
            self.assertEqual(hyperbola_sum(limit), brute)

    def test_alternating_prefix(self):
        """測試交錯前綴和"""
        table = sieve_divisors(8)
        # -1 + 2 - 2 + 3 = 2 ; through 8: -1+2-2+3-2+4-2+4 = 6
        self.assertEqual(int(table.alternating_prefix[4]), 2)
        self.assertEqual(int(table.alternating_prefix[8]), 6)

    def test_table_is_read_only(self):
        """測試表格不可修改"""
        table = sieve_divisors(10)
        with self.assertRaises(ValueError):
            table.d[3] = 7

    def test_sizing_errors(self):
        """測試尺寸錯誤"""
        with self.assertRaises(SizingError):
            sieve_divisors(0)
        with self.assertRaises(SizingError):
            sieve_divisors(10_000, memory_budget=1024)


class TestDelta(unittest.TestCase):
    """Δ 與 Δ* 測試"""

    def setUp(self):
        """測試前置作業"""
        self.table = sieve_divisors(20_000)

    def test_delta_examples(self):
        """測試 Δ 手算值"""
        self.assertAlmostEqual(delta(1, self.table).value, 7 / 4 - 2 * EULER_GAMMA, places=12)
        self.assertAlmostEqual(
            delta(4, self.table).value, 47 / 4 - 8 * math.log(2) - 8 * EULER_GAMMA, places=12
        )
        self.assertEqual(delta(1, self.table).route, DeltaRoute.EXACT)

    def test_delta_jump_equals_divisor_count(self):
        """測試整數點跳躍高度為 d(n)"""
        for n in (12, 97, 360):
            jump = delta(n, self.table).value - delta(n - 1e-9, self.table).value
            self.assertAlmostEqual(jump, int(self.table.d[n]), places=5)

    def test_delta_star_examples(self):
        """測試 Δ* 兩條路徑手算值"""
        one = 15 / 8 - 2 * EULER_GAMMA
        two = 39 / 8 - 2 * math.log(2) - 4 * EULER_GAMMA
        self.assertAlmostEqual(delta_star_combination(1, self.table).value, one, places=12)
        self.assertAlmostEqual(delta_star_alternating(1, self.table).value, one, places=12)
        self.assertAlmostEqual(delta_star_combination(2, self.table).value, two, places=12)
        self.assertAlmostEqual(delta_star_alternating(2, self.table).value, two, places=12)
        self.assertEqual(delta_star_combination(2, self.table).route, DeltaRoute.COMBINATION)
        self.assertEqual(delta_star_alternating(2, self.table).route, DeltaRoute.ALTERNATING)

    def test_cross_route_identity(self):
        """測試兩條 Δ* 路徑一致"""
        rng = np.random.default_rng(7)
        xs = [1.0, 2.5, 1000.5] + list(rng.integers(1, 4999, size=200) + 0.5)
        for x in xs:
            combined = delta_star_combination(float(x), self.table).value
            alternating = delta_star_alternating(float(x), self.table).value
            self.assertLess(abs(combined - alternating), 1e-9 * (1 + abs(combined)))
            self.assertTrue(cross_route_gap(float(x), self.table)[1])

    def test_vectorised_matches_scalar(self):
        """測試向量化版本"""
        xs = np.array([1.0, 3.25, 77.5, 4000.5])
        vector = delta_values(xs, self.table)
        for x, value in zip(xs, vector):
            self.assertAlmostEqual(value, delta(float(x), self.table).value, places=9)
        vector_star = delta_star_values(xs, self.table)
        for x, value in zip(xs, vector_star):
            self.assertAlmostEqual(value, delta_star_combination(float(x), self.table).value, places=8)

    def test_value_independent_of_table_limit(self):
        """測試結果與表格大小無關"""
        small = sieve_divisors(4100)
        self.assertEqual(delta(1000.5, small).value, delta(1000.5, self.table).value)

    def test_underflow(self):
        """測試表格不足"""
        small = sieve_divisors(100)
        with self.assertRaises(TableUnderflowError) as ctx:
            delta(150.5, small)
        self.assertEqual(ctx.exception.required_limit, 150)
        self.assertIn("table underflow", str(ctx.exception))
        with self.assertRaises(TableUnderflowError):
            delta_star_combination(30, small)
        with self.assertRaises(TableUnderflowError):
            delta_star_alternating(30, small)

    def test_domain(self):
        """測試定義域"""
        with self.assertRaises(ParameterError):
            delta(0.5, self.table)
        with self.assertRaises(ParameterError):
            delta_star_alternating(0, self.table)


class TestDivisorSquareSeries(unittest.TestCase):
    """Σ d²(n) n^{-3/2} 測試"""

    def test_series_with_tail_matches_closed_form(self):
        """測試部分和加尾項接近閉式"""
        table = sieve_divisors(100_000)
        partial, tail = divisor_square_series(100_000, table)
        closed = divisor_square_constant()
        self.assertAlmostEqual(closed, 38.745, delta=0.05)
        self.assertLess(partial, closed)
        self.assertLess(abs(partial + tail - closed) / closed, 0.03)


if __name__ == "__main__":
    unittest.main()
