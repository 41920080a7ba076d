# core/settings.py
import os
from dotenv import load_dotenv

# Load environment variables from the .env file
load_dotenv()

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CRITICAL: {name} must be an integer, got '{raw}'.")


def _float_env(name: str) -> float | None:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"CRITICAL: {name} must be a number of seconds, got '{raw}'.")


# --- LANGUAGE / EXECUTION ---
DEFAULT_WIDTH = _int_env("URSA_WIDTH", 8)
MAX_LOOP_ITERATIONS = _int_env("URSA_MAX_LOOP_ITERATIONS", 10_000_000)

# --- SOLVING ---
# Empty means "use the embedded engine"
DEFAULT_SOLVER_COMMAND = os.getenv("URSA_SOLVER", "").strip() or None
DEFAULT_ENGINE = os.getenv("URSA_ENGINE", "cdcl").strip().lower() or "cdcl"
DEFAULT_TIMEOUT = _float_env("URSA_TIMEOUT")

# --- CORPUS ---
CORPUS_DIR = os.getenv("URSA_CORPUS_DIR", os.path.join(BASE_DIR, "corpus"))

# --- SERVICE ---
DATABASE_URL = os.getenv("DATABASE_URL", "sqlite:///./ursa_runs.db")
SCHEDULER_SECONDS = _int_env("URSA_SCHEDULER_SECONDS", 30)

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

if DEFAULT_WIDTH < 1:
    raise ValueError("CRITICAL: URSA_WIDTH must be at least 1.")
