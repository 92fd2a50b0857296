"""
Three-phase experiment base: prepare, compute, finish.
"""

import logging
from abc import ABC, abstractmethod
from typing import Optional

from libs.experiments.models import ExperimentReport
from libs.resources import LabResources
from models.run_config import RunConfig

logger = logging.getLogger(__name__)


class BaseExperiment(ABC):
    """
    抽象實驗類別

    子類別以 name 註冊為 CLI 命令，run() 依序呼叫：
    - prepare: 讀取設定、套用預設值、取得資源
    - compute: 主要計算，回傳 ExperimentReport
    - finish: 後處理與驗收結果記錄
    """

    name: str = ""
    description: str = ""
    # history listing neither writes report files nor is recorded as a run
    writes_reports: bool = True

    def __init__(self):
        self._config: Optional[RunConfig] = None
        self._resources: Optional[LabResources] = None

    @abstractmethod
    def prepare(self, config: RunConfig, resources: LabResources) -> None:
        """讀取設定並準備資源"""

    @abstractmethod
    def compute(self) -> ExperimentReport:
        """主要計算"""

    def finish(self, report: ExperimentReport) -> ExperimentReport:
        """記錄驗收結果"""
        if report.passed:
            logger.info(f"{self.name}: {len(report.rows)} rows, all checks passed")
        else:
            logger.warning(f"{self.name}: acceptance checks failed")
        return report

    def run(self, config: RunConfig, resources: LabResources) -> ExperimentReport:
        """執行完整的實驗流程"""
        self._config = config
        self._resources = resources
        self.prepare(config, resources)
        report = self.compute()
        return self.finish(report)

    @property
    def config(self) -> RunConfig:
        return self._config

    @property
    def resources(self) -> LabResources:
        return self._resources
