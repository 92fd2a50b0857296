#!/usr/bin/env python3
"""
報表輸出測試
"""

import json
import math
import shutil
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

from libs.exceptions import ParameterError
from libs.experiments.models import ExperimentReport, PlotSeries
from utils.report_writer import format_table, write_report


class TestReportWriter(unittest.TestCase):
    """CSV / JSON / plotdata 測試"""

    def setUp(self):
        """測試前置作業"""
        self.tmp = Path(tempfile.mkdtemp())
        self.report = ExperimentReport(
            command="short-interval",
            rows=[{"T": 1000.0, "ratio": np.float64(1.0 / 3.0), "pass": np.bool_(True)},
                  {"T": 2000.0, "ratio": 0.25, "pass": False}],
            summary={"slope": math.nan, "count": np.int64(2)},
            tables={"dyadic": [{"V": 8.0, "R_V": 3}]},
            plots=[PlotSeries("ratio", "sum / envelope", "T", "ratio", [1000.0, 2000.0], [1 / 3, 0.25])],
        )

    def tearDown(self):
        """測試清理作業"""
        shutil.rmtree(self.tmp, ignore_errors=True)

    def test_csv(self):
        """測試 CSV 檔案"""
        paths = write_report(self.report, "csv", self.tmp)
        names = sorted(p.name for p in paths)
        self.assertEqual(names, ["short_interval.csv", "short_interval_dyadic.csv", "short_interval_summary.csv"])
        text = (self.tmp / "short_interval.csv").read_text()
        self.assertEqual(text.splitlines()[0], "T,ratio,pass")
        self.assertIn("0.333333333333", text)
        frame = pd.read_csv(self.tmp / "short_interval_dyadic.csv")
        self.assertEqual(frame["R_V"].tolist(), [3])

    def test_json_is_sorted_and_plain(self):
        """測試 JSON 排序與型別"""
        path = write_report(self.report, "json", self.tmp)[0]
        text = path.read_text()
        document = json.loads(text)
        self.assertEqual(list(document), sorted(document))
        self.assertIsNone(document["summary"]["slope"])
        self.assertEqual(document["summary"]["count"], 2)
        self.assertIs(document["rows"][0]["pass"], True)
        self.assertEqual(write_report(self.report, "json", self.tmp)[0].read_text(), text)

    def test_plotdata(self):
        """測試繪圖資料"""
        path = write_report(self.report, "plotdata", self.tmp)[0]
        lines = path.read_text().splitlines()
        self.assertEqual(lines[0], "# sum / envelope")
        self.assertEqual(lines[1], "# T ratio")
        self.assertEqual(lines[2].split(), ["1000", "0.333333333333"])
        empty = ExperimentReport(command="history", rows=[])
        with self.assertRaises(ParameterError):
            write_report(empty, "plotdata", self.tmp)

    def test_unknown_format(self):
        """測試未知格式"""
        with self.assertRaises(ParameterError):
            write_report(self.report, "xml", self.tmp)

    def test_format_table(self):
        """測試主控台表格"""
        self.assertIn("+", format_table(self.report.rows))
        self.assertEqual(format_table([]), "(no rows)")
        many = [{"i": i} for i in range(50)]
        self.assertIn("10 more rows", format_table(many, max_rows=40))


if __name__ == "__main__":
    unittest.main()
