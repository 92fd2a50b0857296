"""
Run ledger listing.
"""

from libs.experiments.base_experiment import BaseExperiment
from libs.experiments.models import ExperimentReport
from models.history import RunHistory


class HistoryExperiment(BaseExperiment):
    """Recent runs from the run ledger."""

    name = "history"
    description = "list recent runs"
    writes_reports = False

    def prepare(self, config, resources):
        self.history = RunHistory(config.history_db)
        self.limit = config.limit or 20

    def compute(self) -> ExperimentReport:
        rows = [{
            "id": run["id"],
            "command": run["command"],
            "status": run["status"],
            "exit_code": run["exit_code"],
            "rows": run["row_count"],
            "config_hash": run["config_hash"],
            "timestamp": run["timestamp"],
        } for run in self.history.get_runs(self.limit)]
        return ExperimentReport(command=self.name, rows=rows, summary={"listed": len(rows)})
