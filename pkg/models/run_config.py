"""
Validated run configuration for one CLI invocation.
"""

import hashlib
import json
import math
from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import LAB_CONFIG, REPORT_DIR
from libs.moments.models import Quantity
from libs.short_interval.point_systems import GENERATORS


class Command(str, Enum):
    SIEVE = "sieve"
    DELTA = "delta"
    ESTAR = "estar"
    ATKINSON = "atkinson"
    VORONOI = "voronoi"
    SMOOTH = "smooth"
    MOMENTS = "moments"
    QUADRUPLES = "quadruples"
    SHORT_INTERVAL = "short-interval"
    TWELFTH = "twelfth"
    HISTORY = "history"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    PLOTDATA = "plotdata"


QUANTITIES = tuple(q.value for q in Quantity)
G_STRATEGIES = ("quarter-power", "large-values")
LEMMAS = ("2", "3", "both")
LIST_FIELDS = ("x", "N", "T", "G", "k", "delta", "generator")


def _positive(name: str, values) -> None:
    if values is None:
        return
    items = values if isinstance(values, list) else [values]
    if not items:
        raise ValueError(f"{name} must not be empty")
    bad = [v for v in items if not (math.isfinite(v) and v > 0)]
    if bad:
        raise ValueError(f"{name} must be positive and finite, got {bad}")


class RunConfig(BaseModel):
    """Flags, manifest file values and defaults merged for one command."""
    model_config = ConfigDict(extra="forbid")

    command: Command
    cache_dir: Optional[Path] = None
    out_dir: Path = REPORT_DIR
    history_db: Optional[Path] = None
    # None takes the per-command default of LAB_CONFIG["cli"]["command_output"]
    output: Optional[OutputFormat] = None
    epsilon0: Optional[float] = Field(default=None, gt=0.0, lt=0.5)
    seed: int = LAB_CONFIG["cli"]["seed"]
    use_cache: bool = True
    grid_step: Optional[float] = Field(default=None, gt=0.0)
    rs_order: Optional[int] = Field(default=None, ge=0, le=2)

    # divisor sums and Voronoi
    limit: Optional[int] = Field(default=None, ge=1)
    x: Optional[List[float]] = None
    random: Optional[int] = Field(default=None, ge=1)
    xmin: Optional[float] = None
    xmax: Optional[float] = None
    points: Optional[int] = Field(default=None, ge=2)
    N: Optional[List[int]] = None
    n_ratio: Optional[float] = None

    # zeta side
    T: Optional[List[float]] = None
    tmin: Optional[float] = None
    tmax: Optional[float] = None
    e_tmax: Optional[float] = None
    G: Optional[List[float]] = None
    lemma: str = "both"
    sweep: bool = False

    # moments
    quantity: Optional[str] = None
    power: Optional[int] = Field(default=None, ge=1, le=4)
    absolute: bool = False
    suite: bool = False

    # quadruples
    k: Optional[List[int]] = None
    delta: Optional[List[float]] = None
    brute: bool = False

    # short intervals
    generator: Optional[List[str]] = None
    g_strategy: str = "quarter-power"
    V: Optional[float] = None
    dyadic: bool = False
    refine: Optional[bool] = None
    maxima: bool = False

    @model_validator(mode="after")
    def check_command_parameters(self) -> "RunConfig":
        if self.output is None:
            cli = LAB_CONFIG["cli"]
            self.output = OutputFormat(cli["command_output"].get(self.command.value, cli["output"]))
        for name in ("x", "T", "G", "delta", "tmin", "tmax", "e_tmax", "xmin", "xmax", "n_ratio", "V"):
            _positive(name, getattr(self, name))
        if self.tmin is not None and self.tmax is not None and self.tmin >= self.tmax:
            raise ValueError(f"tmin={self.tmin} must be below tmax={self.tmax}")
        if self.xmin is not None and self.xmax is not None and self.xmin >= self.xmax:
            raise ValueError(f"xmin={self.xmin} must be below xmax={self.xmax}")
        if self.command is Command.HISTORY and self.output is OutputFormat.PLOTDATA:
            raise ValueError("history has no plot data")
        check = getattr(self, f"_check_{self.command.name.lower()}", None)
        if check:
            check()
        return self

    def _check_delta(self) -> None:
        if self.x is None and self.random is None:
            raise ValueError("delta needs --x values or --random COUNT")
        if self.x is not None and min(self.x) < 1:
            raise ValueError("Δ(x) is evaluated for x >= 1")
        if self.limit is not None:
            largest = max(self.x) if self.x else (self.xmax or 1.0e4)
            if self.limit < math.floor(4 * largest):
                raise ValueError(f"limit {self.limit} is below 4x = {math.floor(4 * largest)}")

    def _check_atkinson(self) -> None:
        cfg = LAB_CONFIG["explicit"]
        if self.n_ratio is not None and not cfg["atkinson_A"] < self.n_ratio < cfg["atkinson_A_prime"]:
            raise ValueError(f"n_ratio must lie in ({cfg['atkinson_A']}, {cfg['atkinson_A_prime']})")
        if self.T is not None and min(self.T) <= 2 * math.pi:
            raise ValueError("the Atkinson formula is evaluated for T > 2π")

    def _check_voronoi(self) -> None:
        if self.N is not None and min(self.N) < 2:
            raise ValueError("Voronoi truncation needs N >= 2")
        xmin = self.xmin or 1.0e4
        ratio = LAB_CONFIG["explicit"]["voronoi_n_ratio"]
        if self.N is not None and max(self.N) > xmin * ratio:
            raise ValueError(f"N={max(self.N)} exceeds xmin·ratio = {xmin * ratio:g}")

    def _check_smooth(self) -> None:
        if self.lemma not in LEMMAS:
            raise ValueError(f"lemma must be one of {LEMMAS}")
        if self.lemma in ("2", "both") and self.G is not None and min(self.G) < 1:
            raise ValueError("the E(T) sandwich needs G >= 1")
        for T in self.T or []:
            for G in self.G or []:
                if T <= 1 or G * math.log(T) > T / 2:
                    raise ValueError(f"Gaussian window G={G} too wide for T={T}")

    def _check_moments(self) -> None:
        if self.suite:
            return
        if self.quantity not in QUANTITIES:
            raise ValueError(f"quantity must be one of {QUANTITIES}")
        if self.power is None:
            raise ValueError("moments needs --power")

    def _check_quadruples(self) -> None:
        cap = LAB_CONFIG["quadruples"]["n_cap"]
        if self.N is not None and (min(self.N) < 1 or max(self.N) > cap):
            raise ValueError(f"N must lie in [1, {cap}]")
        if self.k is not None and min(self.k) < 2:
            raise ValueError("k must be an integer >= 2")

    def _check_short_interval(self) -> None:
        unknown = [g for g in self.generator or [] if g not in GENERATORS]
        if unknown:
            raise ValueError(f"unknown generators {unknown}; choose from {GENERATORS}")
        if self.g_strategy not in G_STRATEGIES:
            raise ValueError(f"g_strategy must be one of {G_STRATEGIES}")
        if self.g_strategy == "large-values" and self.V is None:
            raise ValueError("the large-values strategy needs --V")

    def canonical_json(self) -> str:
        """Sorted-key JSON of every field, the identity of a run."""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True)

    def config_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()[:16]

    @classmethod
    def from_sources(cls, command: str, file_values: Optional[dict] = None,
                     flag_values: Optional[dict] = None) -> "RunConfig":
        """LAB_CONFIG defaults, then manifest values, then flags; None means unset."""
        merged = {}
        for source in (file_values or {}, flag_values or {}):
            for key, value in source.items():
                if value is None:
                    continue
                if key in LIST_FIELDS and not isinstance(value, list):
                    value = [value]
                merged[key] = value
        merged["command"] = command
        return cls.model_validate(merged)

