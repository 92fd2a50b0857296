import importlib
import logging
import os
from typing import Dict, List, Optional

from .experiments.base_experiment import BaseExperiment

logger = logging.getLogger(__name__)

_SKIP = {"__init__", "base_experiment", "models"}


class ExperimentManager:
    def __init__(self, experiment_directory=None):
        self.experiments: Dict[str, type] = {}
        if experiment_directory is None:
            current_dir = os.path.dirname(os.path.abspath(__file__))
            experiment_directory = os.path.join(current_dir, "experiments")
        self._discover_experiments(experiment_directory)

    def _discover_experiments(self, experiment_directory):
        """動態發現並載入所有實驗"""
        logger.debug(f"Searching experiments in {experiment_directory}")
        if not os.path.isdir(experiment_directory):
            logger.warning(f"Experiment directory does not exist: {experiment_directory}")
            return

        for file_name in sorted(os.listdir(experiment_directory)):
            module_name, ext = os.path.splitext(file_name)
            if ext != ".py" or module_name in _SKIP or module_name.startswith("test_"):
                continue
            try:
                module = importlib.import_module(f"libs.experiments.{module_name}")
            except ImportError as e:
                logger.error(f"Cannot load experiment module '{module_name}': {e}")
                continue
            for attr_name in dir(module):
                attr = getattr(module, attr_name)
                if (isinstance(attr, type) and issubclass(attr, BaseExperiment)
                        and attr is not BaseExperiment and attr.name):
                    self.experiments[attr.name] = attr
                    logger.debug(f"Registered experiment '{attr.name}'")

    def get_experiment(self, name: str) -> Optional[BaseExperiment]:
        """根據命令名稱建立實驗實例"""
        cls = self.experiments.get(name)
        return cls() if cls else None

    def list_experiments(self) -> List[str]:
        """返回所有已註冊命令名稱"""
        return sorted(self.experiments)
