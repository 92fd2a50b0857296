#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
zdl 命令列工具
除數問題與 ζ 均方實驗的批次執行、快取與報表輸出
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# 添加專案根目錄到路徑
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import CACHE_DIR, LAB_CONFIG
from libs.exceptions import (
    CoverageError,
    LabError,
    ParameterError,
    SizingError,
    TableUnderflowError,
)
from libs.experiment_manager import ExperimentManager
from libs.resources import LabResources
from models.history import RunHistory
from models.run_config import OutputFormat, RunConfig
from utils.config_file import load_config_file
from utils.report_writer import format_table, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_CHECK_FAILED = 3

_INVALID_ERRORS = (ParameterError, SizingError, TableUnderflowError, CoverageError)

EPILOG = """
使用範例:
  %(prog)s sieve --limit 10000000                       # 建表並以雙曲線法驗證
  %(prog)s delta --x 1000.5 --limit 5000                # Δ 與 Δ* 兩種算法
  %(prog)s delta --random 500 --xmax 10000              # 500 個半整數點交叉驗證
  %(prog)s estar --tmax 2000 --points 400               # E*(t) 取樣
  %(prog)s atkinson --tmin 100 --tmax 5000 --points 50  # Atkinson 公式對照
  %(prog)s voronoi --N 100 400 1600 6400                # Voronoi 截斷收斂
  %(prog)s smooth --sweep                               # 20 組 (T, G) 平滑檢查
  %(prog)s moments --quantity delta --power 2 --tmax 100000  # 單一動差 (預設輸出 json)
  %(prog)s moments --suite                              # 全部動差指數
  %(prog)s quadruples --N 128 --k 2 --delta 0.01        # 四元組計數
  %(prog)s short-interval --T 1000 2000 4000 --dyadic   # 短區間四次方和
  %(prog)s twelfth --T 500 1000 2000 4000               # 十二次動差
  %(prog)s history --limit 10                           # 最近的執行紀錄

設定檔 (--config) 為 key = value 格式，命令列參數優先於設定檔。
環境變數 ZDL_CACHE_DIR 為快取目錄預設值。
"""


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='key = value 設定檔')
    common.add_argument('--cache-dir', dest='cache_dir', help=f'快取目錄 (預設: {CACHE_DIR})')
    common.add_argument('--out-dir', dest='out_dir', help='報表輸出目錄')
    common.add_argument('--history-db', dest='history_db', help='執行紀錄資料庫')
    per_command = ", ".join(f"{c} 為 {o}" for c, o in LAB_CONFIG["cli"]["command_output"].items())
    common.add_argument('--output', choices=[o.value for o in OutputFormat],
                        help=f'輸出格式 (預設: {LAB_CONFIG["cli"]["output"]}，{per_command})')
    common.add_argument('--epsilon0', type=float, help='包絡中的 ε')
    common.add_argument('--seed', type=int, help=f'亂數種子 (預設: {LAB_CONFIG["cli"]["seed"]})')
    common.add_argument('--no-cache', dest='use_cache', action='store_false', default=None,
                        help='不讀寫快取')
    common.add_argument('--grid-step', dest='grid_step', type=float, help='ζ 取樣步長')
    common.add_argument('--rs-order', dest='rs_order', type=int, help='Riemann–Siegel 修正階數 0-2')
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdl",
        description="zdl - 除數問題與 ζ 均方數值實驗工具",
        formatter_class=argparse.RawTextHelpFormatter,
        epilog=EPILOG,
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest='command', help='可用命令')

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=help_text,
                                     formatter_class=argparse.RawTextHelpFormatter)

    sieve = add('sieve', '建立除數表 d(1..limit)')
    sieve.add_argument('--limit', type=int, help='表長 (預設: 1000000)')

    delta = add('delta', 'Δ(x) 與 Δ*(x)')
    delta.add_argument('--x', type=float, nargs='+', help='取值點')
    delta.add_argument('--random', type=int, help='隨機半整數點個數')
    delta.add_argument('--xmax', type=float, help='隨機點上限 (預設: 10000)')
    delta.add_argument('--limit', type=int, help='除數表長度')

    estar = add('estar', 'E(t) 與 E*(t)')
    estar.add_argument('--t', dest='T', type=float, nargs='+', help='取值點')
    estar.add_argument('--tmin', type=float, help='起點 (預設: 10)')
    estar.add_argument('--tmax', type=float, help='終點 (預設: 1000)')
    estar.add_argument('--points', type=int, help='點數 (預設: 200)')

    atkinson = add('atkinson', 'Atkinson 公式與數值積分比較')
    atkinson.add_argument('--T', type=float, nargs='+', help='T 值')
    atkinson.add_argument('--tmin', type=float, help='等比點起點 (預設: 100)')
    atkinson.add_argument('--tmax', type=float, help='等比點終點 (預設: 5000)')
    atkinson.add_argument('--points', type=int, help='點數 (預設: 50)')
    atkinson.add_argument('--n-ratio', dest='n_ratio', type=float, help='N = ratio·T (預設: 1)')

    voronoi = add('voronoi', 'Voronoi 級數截斷誤差')
    voronoi.add_argument('--N', type=int, nargs='+', help='截斷長度 (預設: 100 400 1600 6400)')
    voronoi.add_argument('--xmin', type=float, help='取樣區間下界 (預設: 10000)')
    voronoi.add_argument('--xmax', type=float, help='取樣區間上界 (預設: 20000)')
    voronoi.add_argument('--points', type=int, help='取樣點數 (預設: 200)')

    smooth = add('smooth', '高斯平滑檢查')
    smooth.add_argument('--T', type=float, nargs='+', help='T 值 (預設: 1000)')
    smooth.add_argument('--G', type=float, nargs='+', help='G 值 (預設: 5)')
    smooth.add_argument('--lemma', choices=['2', '3', 'both'], help='E(T) 夾擠 (2)、Δ* 平均 (3) 或兩者')
    smooth.add_argument('--sweep', action='store_true', default=None, help='20 組隨機 (T, G)')

    moments = add('moments', '動差積分與指數擬合')
    moments.add_argument('--quantity', choices=['delta', 'delta_star', 'E', 'E_star'])
    moments.add_argument('--power', type=int, help='次方 k')
    moments.add_argument('--tmax', type=float, help='積分上限')
    moments.add_argument('--tmin', type=float, help='擬合起點')
    moments.add_argument('--e-tmax', dest='e_tmax', type=float, help='套組中 E、E* 的上限')
    moments.add_argument('--absolute', action='store_true', default=None, help='積分 |f|^k')
    moments.add_argument('--suite', action='store_true', default=None, help='全部動差檢查')

    quadruples = add('quadruples', '四元組計數')
    quadruples.add_argument('--N', type=int, nargs='+')
    quadruples.add_argument('--k', type=int, nargs='+')
    quadruples.add_argument('--delta', type=float, nargs='+')
    quadruples.add_argument('--sweep', action='store_true', default=None, help='驗收掃描')
    quadruples.add_argument('--brute', action='store_true', default=None, help='小 N 暴力比對')

    short = add('short-interval', '短區間四次方和')
    short.add_argument('--T', type=float, nargs='+', help='T 值 (預設: 1000)')
    short.add_argument('--generator', nargs='+', choices=['uniform', 'random', 'greedy-peaks'])
    short.add_argument('--g-strategy', dest='g_strategy', choices=['quarter-power', 'large-values'])
    short.add_argument('--V', type=float, help='large-values 策略的 V')
    short.add_argument('--dyadic', action='store_true', default=None, help='二進位大值分類')
    short.add_argument('--refine', action='store_true', default=None, help='局部精修最大值')

    twelfth = add('twelfth', '十二次動差')
    twelfth.add_argument('--T', type=float, nargs='+', help='T 值 (預設: 500 1000 2000 4000)')
    twelfth.add_argument('--maxima', action='store_true', default=None, help='單位區間最大值上界')
    twelfth.add_argument('--refine', action='store_true', default=None, help='局部精修最大值')

    history = add('history', '執行紀錄')
    history.add_argument('--limit', type=int, help='筆數 (預設: 20)')

    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge the manifest file and the flags into a validated RunConfig."""
    flags = {key: value for key, value in vars(args).items() if key not in ('command', 'config')}
    file_values = load_config_file(args.config) if args.config else {}
    return RunConfig.from_sources(args.command, file_values, flags)


def _check_cache_dir(config: RunConfig) -> None:
    if not config.use_cache:
        return
    cache_dir = Path(config.cache_dir or CACHE_DIR)
    try:
        cache_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ParameterError(f"cache directory {cache_dir} cannot be created: {exc}") from exc
    if not os.access(cache_dir, os.W_OK):
        raise ParameterError(f"cache directory {cache_dir} is not writable")


def run(config: RunConfig, manager: Optional[ExperimentManager] = None,
        echo: bool = True) -> int:
    """Execute one command, write its reports and record the run. Returns the exit status."""
    manager = manager or ExperimentManager()
    experiment = manager.get_experiment(config.command.value)
    if experiment is None:
        logger.error(f"Unknown command '{config.command.value}'")
        return EXIT_INVALID

    history = RunHistory(config.history_db) if experiment.writes_reports else None
    paths: List[Path] = []
    report = None
    try:
        _check_cache_dir(config)
        resources = LabResources(
            cache_dir=config.cache_dir,
            use_cache=config.use_cache,
            memory_budget=LAB_CONFIG["divisor"]["memory_budget_bytes"],
            grid_step=config.grid_step,
            rs_order=config.rs_order,
        )
        report = experiment.run(config, resources)
        if experiment.writes_reports:
            paths = write_report(report, config.output.value, config.out_dir)
        status = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    except _INVALID_ERRORS as exc:
        logger.error(f"{config.command.value}: {exc}")
        status = EXIT_INVALID
    except LabError as exc:
        logger.error(f"{config.command.value} failed: {exc}")
        status = EXIT_FAILURE

    if echo and report is not None:
        print(format_table(report.rows))
        for name, rows in report.tables.items():
            print(f"\n[{name}]")
            print(format_table(rows))
        if report.summary:
            print(format_table([{"key": k, "value": v} for k, v in sorted(report.summary.items())]))
        for path in paths:
            print(f"✅ {path}")

    if history is not None:
        labels = {EXIT_OK: "success", EXIT_CHECK_FAILED: "check-failed",
                  EXIT_INVALID: "invalid", EXIT_FAILURE: "error"}
        history.add_run(
            command=config.command.value,
            config_json=config.canonical_json(),
            config_hash=config.config_hash(),
            status=labels[status],
            exit_code=status,
            row_count=report.row_count if report is not None else 0,
            output_paths=[str(p) for p in paths],
        )
    return status


def main(argv: Optional[List[str]] = None) -> int:
    """主函數"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_INVALID

    try:
        config = load_run_config(args)
    except ValidationError as exc:
        logger.error(f"Invalid parameters for '{args.command}':\n{exc}")
        return EXIT_INVALID
    except ParameterError as exc:
        logger.error(str(exc))
        return EXIT_INVALID
    return run(config)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO,
                        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    sys.exit(main())
