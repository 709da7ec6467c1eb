# Butterfly/utils/logger.py

import logging
from logging.handlers import RotatingFileHandler, QueueHandler, QueueListener
import os
import queue
import atexit

LOG_DIR = os.getenv("LOG_DIR") or os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'logs')
LOG_FILE = os.path.join(LOG_DIR, 'workbench.txt')

logging._srcfile = None
logging.logThreads = 0
logging.logProcesses = 0

log_queue = queue.Queue(maxsize=10000)

formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

console_handler = logging.StreamHandler()
console_handler.setFormatter(formatter)

handlers = [console_handler]

if os.getenv("LOG_TO_FILE", "True").lower() in ("true", "1", "t", "y", "yes"):
    try:
        os.makedirs(LOG_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(LOG_FILE, maxBytes=10*1024*1024, backupCount=5)
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)
    except OSError:
        LOG_FILE = None

listener = QueueListener(log_queue, *handlers, respect_handler_level=True)
listener.start()

logger = logging.getLogger('ButterflyWorkbench')
logger.setLevel(logging.INFO)
logger.propagate = False
logger.addHandler(QueueHandler(log_queue))

atexit.register(listener.stop)


def set_level(level: str) -> None:
    resolved = logging.getLevelName(level.upper())
    if not isinstance(resolved, int):
        logger.warning(f"Unknown log level '{level}', keeping {logging.getLevelName(logger.level)}")
        return
    logger.setLevel(resolved)

__all__ = ['logger', 'LOG_FILE', 'set_level']
