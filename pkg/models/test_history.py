#!/usr/bin/env python3
"""
RunHistory 測試
"""

import shutil
import tempfile
import unittest
from pathlib import Path

from models.history import RunHistory


class TestRunHistory(unittest.TestCase):
    """執行紀錄測試"""

    def setUp(self):
        """測試前置作業"""
        self.tmp = Path(tempfile.mkdtemp())
        self.history = RunHistory(self.tmp / "sub" / "runs.db")

    def tearDown(self):
        """測試清理作業"""
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_add_and_list(self):
        """測試新增與列出"""
        first = self.history.add_run("sieve", '{"limit": 10}', "aaaa", "success", 0, 1, ["a.csv"])
        second = self.history.add_run("delta", '{"x": [2.5]}', "bbbb", "check-failed", 3, 4)
        runs = self.history.get_runs(10)
        self.assertEqual([r["id"] for r in runs], [second, first])
        self.assertEqual(runs[1]["config"], {"limit": 10})
        self.assertEqual(runs[1]["output_paths"], ["a.csv"])
        self.assertEqual(runs[0]["output_paths"], [])
        self.assertEqual(len(self.history.get_runs(1)), 1)
        self.assertEqual(self.history.get_runs(10, command="delta")[0]["exit_code"], 3)

    def test_get_run_and_stats(self):
        """測試單筆查詢與統計"""
        run_id = self.history.add_run("twelfth", "{}", "cccc", "success", 0)
        self.assertEqual(self.history.get_run(run_id)["command"], "twelfth")
        self.assertIsNone(self.history.get_run(run_id + 100))
        self.history.add_run("twelfth", "{}", "cccc", "error", 1)
        stats = self.history.get_stats()
        self.assertEqual(stats["total_runs"], 2)
        self.assertEqual(stats["by_command"]["twelfth"], {"success": 1, "error": 1})


if __name__ == "__main__":
    unittest.main()
