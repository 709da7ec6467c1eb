# Butterfly/vars.py

import os

import psutil
from dotenv import load_dotenv
from Butterfly.utils.logger import logger

load_dotenv("config.env")

def str_to_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Invalid {name} '{raw}' in environment; must be an integer. Using {default}.")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} is below {minimum}; using {default}.")
        return default
    return value

def str_to_float(name: str, default: float) -> float:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = float(raw)
    except ValueError:
        logger.warning(f"Invalid {name} '{raw}' in environment; must be a number. Using {default}.")
        return default
    return value if value >= 0 else default

def default_workers() -> int:
    return psutil.cpu_count(logical=False) or 1

class Var:
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    WORKERS: int = str_to_int("WORKERS", default_workers(), minimum=1)

    # 0 disables the limit
    NODE_BUDGET: int = str_to_int("NODE_BUDGET", 0)
    TIME_BUDGET: float = str_to_float("TIME_BUDGET", 0.0)
    # per-branch node cap for unlimited searches beyond the certified range
    BEST_EFFORT_NODES: int = str_to_int("BEST_EFFORT_NODES", 2_000_000, minimum=1)

    PROPTEST_CASES: int = str_to_int("PROPTEST_CASES", 1000, minimum=1)
    DEFAULT_SEED: int = str_to_int("DEFAULT_SEED", 0)

    # a full n! scan above this is refused
    MAX_CANONICAL_N: int = 8
