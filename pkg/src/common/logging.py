"""Structured logging setup (stderr + file). Data goes to files/stdout, never here."""
import sys
from pathlib import Path
from loguru import logger
from .config import SETTINGS
from .constants import LOGS_DIR

_FORMAT = "{time:HH:mm:ss} | {level: <7} | {extra[component]} | {message}"

# Configure sinks (stderr & file)
logger.remove()
logger.configure(extra={"component": "-"})
logger.add(sys.stderr, level=SETTINGS.GLE_LOG_LEVEL, format=_FORMAT, backtrace=False, diagnose=False)
if SETTINGS.GLE_LOG_FILE:
    _LOG_DIR = Path(LOGS_DIR)
    _LOG_DIR.mkdir(parents=True, exist_ok=True)
    logger.add(_LOG_DIR / "app.log", level=SETTINGS.GLE_LOG_LEVEL, rotation="5 MB",
               retention="14 days", enqueue=True)

def get_logger(name: str):
    return logger.bind(component=name)
