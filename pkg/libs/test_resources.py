#!/usr/bin/env python3
"""
LabResources 快取重用與修復測試
"""

import shutil
import tempfile
import unittest
from pathlib import Path

from libs.resources import LabResources


class TestLabResources(unittest.TestCase):
    """共用資源測試"""

    def setUp(self):
        """測試前置作業"""
        self.tmp = Path(tempfile.mkdtemp())

    def tearDown(self):
        """測試清理作業"""
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_table_reused_in_memory_and_on_disk(self):
        """測試除數表重用"""
        resources = LabResources(cache_dir=self.tmp)
        table = resources.divisor_table(5000)
        self.assertIs(resources.divisor_table(1000), table)
        self.assertTrue((self.tmp / "divisor_5000.zdl").exists())

        fresh = LabResources(cache_dir=self.tmp)
        self.assertEqual(fresh.divisor_table(3000).limit, 5000)

    def test_corrupt_table_rebuilt(self):
        """測試損毀快取被重建"""
        LabResources(cache_dir=self.tmp).divisor_table(2000)
        path = self.tmp / "divisor_2000.zdl"
        path.write_bytes(b"garbage")
        with self.assertLogs("libs.resources", level="WARNING"):
            table = LabResources(cache_dir=self.tmp).divisor_table(2000)
        self.assertEqual(table.limit, 2000)
        self.assertEqual(path.read_bytes()[:4], b"ZDL1")

    def test_grid_reused(self):
        """測試網格重用"""
        resources = LabResources(cache_dir=self.tmp, grid_step=0.05)
        grid = resources.zeta_grid(60.0)
        self.assertIs(resources.zeta_grid(50.0), grid)
        self.assertEqual(len(list(self.tmp.glob("*.zgr"))), 1)

        fresh = LabResources(cache_dir=self.tmp, grid_step=0.05)
        self.assertEqual(fresh.zeta_grid(55.0).t_end, grid.t_end)
        other_step = LabResources(cache_dir=self.tmp, grid_step=0.04)
        self.assertEqual(other_step.zeta_grid(55.0).step, 0.04)

    def test_corrupt_grid_rebuilt(self):
        """測試損毀網格被重建"""
        LabResources(cache_dir=self.tmp, grid_step=0.05).zeta_grid(40.0)
        path = next(self.tmp.glob("*.zgr"))
        path.write_bytes(path.read_bytes()[:100])
        with self.assertLogs("libs.resources", level="WARNING"):
            grid = LabResources(cache_dir=self.tmp, grid_step=0.05).zeta_grid(40.0)
        self.assertGreaterEqual(grid.t_end, 40.0)

    def test_without_cache(self):
        """測試停用快取"""
        resources = LabResources(cache_dir=self.tmp, use_cache=False)
        resources.divisor_table(100)
        self.assertEqual(list(self.tmp.iterdir()), [])


if __name__ == "__main__":
    unittest.main()
