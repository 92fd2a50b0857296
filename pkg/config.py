import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables (.env in the working directory, if present)
load_dotenv()

# Base directory
BASE_DIR = Path(__file__).parent

# Euler's constant
EULER_GAMMA = 0.57721566490153286061

# Cache and report locations
CACHE_DIR = Path(os.getenv("ZDL_CACHE_DIR", str(BASE_DIR / "cache")))
REPORT_DIR = BASE_DIR / "reports"

# Run history database
HISTORY_DB_PATH = Path(os.getenv("ZDL_HISTORY_DB", str(BASE_DIR / "db" / "runs.db")))

# Logging
LOG_LEVEL = os.getenv("ZDL_LOG_LEVEL", "INFO")

# Sieve sizing cap (d, prefix and alternating prefix arrays together)
MEMORY_BUDGET_MB = int(os.getenv("ZDL_MEMORY_BUDGET_MB", "2048"))

# Laboratory configuration
LAB_CONFIG = {
    "divisor": {
        "memory_budget_bytes": MEMORY_BUDGET_MB * 1024 * 1024,
        "cross_route_tolerance": 1e-9,
    },
    "zeta": {
        "euler_maclaurin_below": 30.0,
        "em_terms": 40,
        "em_corrections": 20,
        "rs_order": 2,
        "grid_step": 0.02,
        "grid_chunk": 20000,
        "grid_workers": 4,
    },
    "explicit": {
        "epsilon0": 0.01,
        "voronoi_n_ratio": 1.0,
        "atkinson_A": 0.5,
        "atkinson_A_prime": 2.0,
        "atkinson_constant": 10.0,
    },
    "smoothing": {
        "envelope_constant": 3.0,
        "lemma3_epsilon": 0.05,
        "steps_per_width": 20,
        "lemma3_max_step": 0.01,
    },
    "moments": {
        "delta_points_per_unit": 8,
        "t_min": 100.0,
        "t_ratio": 1.25,
        "delta_fit_decades": 1.0,
        "delta_t_max": 100000.0,
        "e_t_max": 5000.0,
        "min_fit_points": 6,
        "delta_coefficient_tolerance": 0.15,
        "e_coefficient_tolerance": 0.25,
        "e_star_square_slope_max": 1.45,
        "series_limit": 1000000,
    },
    "quadruples": {
        "n_cap": 1500,
        "epsilon0": 0.05,
        "lemma1_constant": 32.0,
        "tie_tolerance": 1e-12,
        "sweep_n": [64, 128, 256, 512],
        "sweep_k": [2, 3],
        "sweep_delta_count": 9,
    },
    "short_interval": {
        "epsilon0": 0.05,
        "theorem2_constant": 16.0,
        "dyadic_max_step": 0.05,
        "refine_maxima": False,
        "twelfth_slope_max": 2.3,
        "trend_slope_max": 0.2,
    },
    "cli": {
        "output": "csv",
        "command_output": {"moments": "json"},
        "seed": 20240101,
    },
}
