#!/usr/bin/env python3
"""
key=value 設定檔測試
"""

import shutil
import tempfile
import unittest
from pathlib import Path

from libs.exceptions import ParameterError
from utils.config_file import load_config_file, parse_value


class TestConfigFile(unittest.TestCase):
    """設定檔解析測試"""

    def setUp(self):
        """測試前置作業"""
        self.tmp = Path(tempfile.mkdtemp())

    def tearDown(self):
        """測試清理作業"""
        shutil.rmtree(self.tmp, ignore_errors=True)

    def write(self, text):
        path = self.tmp / "run.conf"
        path.write_text(text, encoding="utf-8")
        return path

    def test_values(self):
        """測試數值、布林與串列"""
        self.assertEqual(parse_value("12"), 12)
        self.assertEqual(parse_value("1e-3"), 0.001)
        self.assertIs(parse_value("true"), True)
        self.assertEqual(parse_value("E_star"), "E_star")
        self.assertEqual(parse_value("500 1000 2000.5"), [500, 1000, 2000.5])

    def test_file(self):
        """測試註解、空行與鍵名"""
        path = self.write("# manifest\n\nquantity = E   # inline\npower=2\ng-strategy = quarter-power\npower = 4\n")
        self.assertEqual(load_config_file(path), {"quantity": "E", "power": 4, "g_strategy": "quarter-power"})

    def test_quoted_values(self):
        """測試引號值與 export 前綴"""
        path = self.write("export quantity=\"E_star\"\nT = '500 1000'\n")
        self.assertEqual(load_config_file(path), {"quantity": "E_star", "T": [500, 1000]})

    def test_errors(self):
        """測試格式錯誤"""
        with self.assertRaises(ParameterError):
            load_config_file(self.write("power 2\n"))
        with self.assertRaises(ParameterError):
            load_config_file(self.write("power =\n"))
        with self.assertRaises(ParameterError):
            load_config_file(self.write("quantity = E\npower\n"))
        with self.assertRaises(ParameterError):
            load_config_file(self.tmp / "missing.conf")


if __name__ == "__main__":
    unittest.main()
