#!/usr/bin/env python3
"""
zdl 命令列測試
"""

import shutil
import tempfile
import unittest
from pathlib import Path

import pandas as pd

from models.history import RunHistory
from tools.zdl_cli import EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, main


class TestZdlCli(unittest.TestCase):
    """命令列端到端測試"""

    def setUp(self):
        """測試前置作業"""
        self.tmp = Path(tempfile.mkdtemp())
        self.common = [
            "--cache-dir", str(self.tmp / "cache"),
            "--out-dir", str(self.tmp / "out"),
            "--history-db", str(self.tmp / "runs.db"),
        ]

    def tearDown(self):
        """測試清理作業"""
        shutil.rmtree(self.tmp, ignore_errors=True)

    def zdl(self, *args):
        command, rest = args[0], list(args[1:])
        return main([command] + rest + self.common)

    def test_delta_routes_agree(self):
        """測試 Δ* 兩種算法一致"""
        self.assertEqual(self.zdl("delta", "--x", "1000.5", "--limit", "5000"), EXIT_OK)
        frame = pd.read_csv(self.tmp / "out" / "delta.csv")
        self.assertEqual(len(frame), 1)
        self.assertTrue(bool(frame["pass"][0]))
        self.assertLess(abs(frame["delta_star_combination"][0] - frame["delta_star_alternating"][0]), 1e-8)
        self.assertTrue((self.tmp / "cache" / "divisor_5000.zdl").exists())

    def test_reruns_are_byte_identical(self):
        """測試相同設定輸出相同位元組"""
        self.assertEqual(self.zdl("delta", "--random", "20", "--xmax", "2000", "--output", "json"), EXIT_OK)
        first = (self.tmp / "out" / "delta.json").read_bytes()
        self.assertEqual(self.zdl("delta", "--random", "20", "--xmax", "2000", "--output", "json"), EXIT_OK)
        self.assertEqual((self.tmp / "out" / "delta.json").read_bytes(), first)

    def test_quadruples_and_history(self):
        """測試四元組命令與執行紀錄"""
        self.assertEqual(self.zdl("quadruples", "--N", "12", "--k", "2", "--delta", "0.01", "--brute"), EXIT_OK)
        frame = pd.read_csv(self.tmp / "out" / "quadruples.csv")
        self.assertTrue(bool(frame["brute_force_match"][0]))
        runs = RunHistory(self.tmp / "runs.db").get_runs(5)
        self.assertEqual(len(runs), 1)
        self.assertEqual(runs[0]["status"], "success")
        self.assertEqual(runs[0]["config"]["N"], [12])
        self.assertEqual(self.zdl("history", "--limit", "5"), EXIT_OK)
        self.assertEqual(len(RunHistory(self.tmp / "runs.db").get_runs(5)), 1)

    def test_validation_errors(self):
        """測試參數錯誤回傳 2"""
        self.assertEqual(self.zdl("delta", "--x", "1000.5", "--limit", "100"), EXIT_INVALID)
        self.assertEqual(self.zdl("moments", "--quantity", "E"), EXIT_INVALID)
        self.assertEqual(main([]), EXIT_INVALID)
        with self.assertRaises(SystemExit):
            main(["spiral"])

    def test_config_file(self):
        """測試設定檔與命令列合併"""
        manifest = self.tmp / "run.conf"
        manifest.write_text("N = 12\nk = 2\ndelta = 0.5 0.01\n", encoding="utf-8")
        self.assertEqual(self.zdl("quadruples", "--config", str(manifest), "--delta", "0.02"), EXIT_OK)
        frame = pd.read_csv(self.tmp / "out" / "quadruples.csv")
        self.assertEqual(frame["delta"].tolist(), [0.02])

    def test_failed_check_exit_status(self):
        """測試驗收失敗回傳 3"""
        status = self.zdl("short-interval", "--T", "100", "--generator", "uniform")
        self.assertEqual(status, EXIT_CHECK_FAILED)
        frame = pd.read_csv(self.tmp / "out" / "short_interval.csv")
        self.assertGreater(float(frame["ratio"][0]), 16.0)
        runs = RunHistory(self.tmp / "runs.db").get_runs(1)
        self.assertEqual(runs[0]["status"], "check-failed")
        self.assertEqual(runs[0]["exit_code"], EXIT_CHECK_FAILED)

    def test_moments_default_json(self):
        """測試 moments 預設輸出 json"""
        status = self.zdl("moments", "--quantity", "delta", "--power", "3", "--tmax", "20000")
        self.assertIn(status, (EXIT_OK, EXIT_CHECK_FAILED))
        self.assertTrue((self.tmp / "out" / "moments.json").exists())
        self.assertFalse((self.tmp / "out" / "moments.csv").exists())

    def test_sieve_plotdata(self):
        """測試 sieve 與繪圖輸出"""
        self.assertEqual(self.zdl("sieve", "--limit", "20000", "--output", "plotdata"), EXIT_OK)
        lines = (self.tmp / "out" / "sieve_delta.dat").read_text().splitlines()
        self.assertTrue(lines[0].startswith("# Δ(x)"))
        self.assertEqual(len(lines[2].split()), 2)


if __name__ == "__main__":
    unittest.main()
