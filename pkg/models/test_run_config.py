#!/usr/bin/env python3
"""
RunConfig 驗證測試
"""

import unittest

from pydantic import ValidationError

from models.run_config import Command, OutputFormat, RunConfig


class TestRunConfig(unittest.TestCase):
    """參數合併與驗證測試"""

    def test_flags_override_file(self):
        """測試命令列優先於設定檔"""
        config = RunConfig.from_sources(
            "quadruples",
            {"N": 64, "k": [2, 3], "delta": 0.1, "seed": 5},
            {"N": [128], "seed": None},
        )
        self.assertEqual(config.command, Command.QUADRUPLES)
        self.assertEqual(config.N, [128])
        self.assertEqual(config.k, [2, 3])
        self.assertEqual(config.delta, [0.1])
        self.assertEqual(config.seed, 5)
        self.assertEqual(config.output, OutputFormat.CSV)

    def test_unknown_key_rejected(self):
        """測試未知設定鍵"""
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("sieve", {"limt": 10})

    def test_delta_requirements(self):
        """測試 delta 命令的前置條件"""
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("delta", {})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("delta", {"x": [0.5]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("delta", {"x": [1000.5], "limit": 3000})
        config = RunConfig.from_sources("delta", {"x": [1000.5], "limit": 5000})
        self.assertEqual(config.limit, 5000)

    def test_moments_requirements(self):
        """測試 moments 命令的前置條件"""
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("moments", {"quantity": "zeta", "power": 2})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("moments", {"quantity": "E"})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("moments", {"quantity": "E", "power": 7})
        self.assertTrue(RunConfig.from_sources("moments", {"suite": True}).suite)

    def test_per_command_output(self):
        """測試各命令的預設輸出格式"""
        self.assertEqual(RunConfig.from_sources("moments", {"suite": True}).output, OutputFormat.JSON)
        self.assertEqual(RunConfig.from_sources("sieve", {}).output, OutputFormat.CSV)
        config = RunConfig.from_sources("moments", {"suite": True}, {"output": "csv"})
        self.assertEqual(config.output, OutputFormat.CSV)

    def test_quadruple_root_order(self):
        """測試 k 至少為 2"""
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("quadruples", {"k": [1]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("quadruples", {"k": [2, 1]})
        self.assertEqual(RunConfig.from_sources("quadruples", {"k": [2]}).k, [2])

    def test_ranges(self):
        """測試數值範圍"""
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("estar", {"tmin": 100.0, "tmax": 50.0})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("smooth", {"T": [500.0], "G": [0.5]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("smooth", {"T": [100.0], "G": [20.0]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("quadruples", {"N": [5000]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("voronoi", {"N": [1]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("atkinson", {"n_ratio": 3.0})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("short-interval", {"generator": ["spiral"]})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("short-interval", {"g_strategy": "large-values"})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("history", {"output": "plotdata"})
        with self.assertRaises(ValidationError):
            RunConfig.from_sources("sieve", {"rs_order": 3})

    def test_hash_is_stable(self):
        """測試設定雜湊穩定"""
        a = RunConfig.from_sources("quadruples", {"N": [128], "k": [2]})
        b = RunConfig.from_sources("quadruples", {}, {"k": [2], "N": [128]})
        c = RunConfig.from_sources("quadruples", {"N": [64], "k": [2]})
        self.assertEqual(a.canonical_json(), b.canonical_json())
        self.assertEqual(a.config_hash(), b.config_hash())
        self.assertNotEqual(a.config_hash(), c.config_hash())


if __name__ == "__main__":
    unittest.main()
