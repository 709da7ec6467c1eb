# Butterfly/utils/human_readable.py

from typing import Dict

import psutil

from Butterfly.utils.logger import logger

_UNITS = ("B", "KiB", "MiB", "GiB", "TiB")


def format_bytes(size: int) -> str:
    value = float(size)
    for unit in _UNITS[:-1]:
        if value < 1024:
            return f"{int(value)} B" if unit == "B" else f"{value:.1f} {unit}"
        value /= 1024
    return f"{value:.1f} {_UNITS[-1]}"


def process_usage() -> Dict[str, str]:
    """Resident memory and CPU time for the report footer.

    CPU time includes reaped search workers, so a pooled run is charged for
    the branches it farmed out.
    """
    try:
        process = psutil.Process()
        rss = process.memory_info().rss
        cpu = process.cpu_times()
    except psutil.Error as e:
        logger.warning(f"Could not read process usage: {e}")
        return {"rss": "N/A", "cpu": "N/A"}
    cpu_seconds = cpu.user + cpu.system + getattr(cpu, "children_user", 0.0) + getattr(cpu, "children_system", 0.0)
    return {"rss": format_bytes(rss), "cpu": f"{cpu_seconds:.2f}s"}
