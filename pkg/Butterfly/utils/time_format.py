# Butterfly/utils/time_format.py

from Butterfly.utils.logger import logger

_TIME_PERIODS = (('h', 3600), ('m', 60), ('s', 1))

def get_readable_time(milliseconds: float) -> str:
    try:
        if milliseconds < 1000:
            return f"{milliseconds:.1f}ms"
        seconds = milliseconds / 1000
        result = []
        for suffix, period in _TIME_PERIODS:
            if seconds >= period:
                value, seconds = divmod(seconds, period)
                result.append(f"{int(value)}{suffix}")
        return ' '.join(result) if result else '0s'
    except Exception as e:
        logger.error(f"Error in get_readable_time: {e}", exc_info=True)
        return "N/A"
