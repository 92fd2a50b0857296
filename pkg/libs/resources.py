"""
Lazily built, cache-backed divisor table and zeta grid shared by every experiment.
"""

import logging
import re
from pathlib import Path
from typing import Optional, Union

from config import CACHE_DIR, LAB_CONFIG
from libs.divisor.divisor_table import DivisorTable, sieve_divisors
from libs.exceptions import CacheCorruptError
from libs.zeta.sample_grid import ZetaSampleGrid, build_grid
from utils.cache_store import load_divisor_table, load_zeta_grid, save_divisor_table, save_zeta_grid

logger = logging.getLogger(__name__)

_DIVISOR_NAME = re.compile(r"^divisor_(\d+)\.zdl$")
_GRID_NAME = re.compile(r"^zeta_step(?P<step>[0-9.e-]+)_order(?P<order>\d)_end(?P<end>[0-9.]+)\.zgr$")


class LabResources:
    """Owns the divisor table and zeta grid of one run.

    A cached table is reused whenever its limit covers the request; a cached grid
    whenever its step and correction order match and its end covers the request.
    """

    def __init__(self, cache_dir: Optional[Union[str, Path]] = None, use_cache: bool = True,
                 memory_budget: Optional[int] = None, grid_step: Optional[float] = None,
                 rs_order: Optional[int] = None):
        self.cache_dir = Path(cache_dir) if cache_dir else CACHE_DIR
        self.use_cache = use_cache
        self.memory_budget = memory_budget
        self.grid_step = grid_step or LAB_CONFIG["zeta"]["grid_step"]
        self.rs_order = LAB_CONFIG["zeta"]["rs_order"] if rs_order is None else rs_order
        self._table: Optional[DivisorTable] = None
        self._grid: Optional[ZetaSampleGrid] = None

    # ---- divisor table ----

    def divisor_table(self, limit: int) -> DivisorTable:
        """A table with table.limit >= limit."""
        limit = max(int(limit), 1)
        if self._table is not None and self._table.limit >= limit:
            return self._table
        table = self._load_cached_table(limit) if self.use_cache else None
        if table is None:
            table = sieve_divisors(limit, self.memory_budget)
            if self.use_cache:
                save_divisor_table(table, self.cache_dir / f"divisor_{table.limit}.zdl")
        self._table = table
        return table

    def _load_cached_table(self, limit: int) -> Optional[DivisorTable]:
        candidates = []
        if self.cache_dir.is_dir():
            for path in self.cache_dir.iterdir():
                match = _DIVISOR_NAME.match(path.name)
                if match and int(match.group(1)) >= limit:
                    candidates.append((int(match.group(1)), path))
        for cached_limit, path in sorted(candidates):
            try:
                table = load_divisor_table(path)
                logger.info(f"Loaded divisor table (limit {cached_limit}) from {path}")
                return table
            except CacheCorruptError as exc:
                logger.warning(f"Discarding corrupt cache file: {exc}")
                path.unlink(missing_ok=True)
        return None

    # ---- zeta grid ----

    def _grid_path(self, t_end: float) -> Path:
        return self.cache_dir / f"zeta_step{self.grid_step!r}_order{self.rs_order}_end{t_end:.4f}.zgr"

    def zeta_grid(self, t_end: float) -> ZetaSampleGrid:
        """A grid from t = 0 covering [0, t_end] at the configured step and order."""
        if self._grid is not None and self._grid.covers(0.0, t_end):
            return self._grid
        grid = self._load_cached_grid(t_end) if self.use_cache else None
        if grid is None:
            grid = build_grid(t_end, step=self.grid_step, rs_order=self.rs_order)
            if self.use_cache:
                save_zeta_grid(grid, self._grid_path(grid.t_end))
        self._grid = grid
        return grid

    def _load_cached_grid(self, t_end: float) -> Optional[ZetaSampleGrid]:
        candidates = []
        if self.cache_dir.is_dir():
            for path in self.cache_dir.iterdir():
                match = _GRID_NAME.match(path.name)
                if (match and float(match.group("step")) == self.grid_step
                        and int(match.group("order")) == self.rs_order
                        and float(match.group("end")) >= t_end - 1e-4):
                    candidates.append((float(match.group("end")), path))
        for _, path in sorted(candidates):
            try:
                grid = load_zeta_grid(path)
            except CacheCorruptError as exc:
                logger.warning(f"Discarding corrupt cache file: {exc}")
                path.unlink(missing_ok=True)
                continue
            if (grid.t_start == 0.0 and grid.step == self.grid_step
                    and grid.rs_order == self.rs_order and grid.covers(0.0, t_end)):
                logger.info(f"Loaded zeta grid [0, {grid.t_end}] from {path}")
                return grid
        return None
