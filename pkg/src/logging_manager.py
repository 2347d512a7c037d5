#!/usr/bin/env python
import logging
from pathlib import Path
from typing import Optional

from compressing_rotating_file_handler import CompressingRotatingFileHandler

LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
DEFAULT_MAX_BYTES = 10 * 1024 * 1024
DEFAULT_BACKUPS = 10
# Held at WARNING while a run is logged.
QUIET_LOGGERS = ("joblib", "sympy")


class LoggingManager:
    """
    One gzip-rotating log per data/ tree; use as a context manager around a CLI run.
    """
    def __init__(self, log_file: Path) -> None:
        self.log_file = log_file
        self.handler: Optional[CompressingRotatingFileHandler] = None

    def __enter__(self) -> "LoggingManager":
        self.setup()
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.shutdown()

    def setup(self, level: int = logging.INFO, max_bytes: int = DEFAULT_MAX_BYTES, backup_count: int = DEFAULT_BACKUPS) -> None:
        """
        Replace every root handler with the rotating file handler.

        Args:
            level: Root level; --verbose lowers it to DEBUG for per-degree lines
            max_bytes: Size at which the log rotates
            backup_count: Number of gzip backups kept
        """
        self.log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = CompressingRotatingFileHandler(
            filename=str(self.log_file),
            mode="a",
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

        root_logger = logging.getLogger()
        for old in root_logger.handlers[:]:
            root_logger.removeHandler(old)
            if old is self.handler:
                old.close()
        root_logger.setLevel(level)
        root_logger.addHandler(handler)
        for name in QUIET_LOGGERS:
            logging.getLogger(name).setLevel(logging.WARNING)
        self.handler = handler
        logging.info(f"Logging to {self.log_file} (rotation at {max_bytes} bytes, {backup_count} backups)")

    def shutdown(self) -> None:
        if self.handler is None:
            return
        logging.info("Logging system shutdown")
        logging.getLogger().removeHandler(self.handler)
        self.handler.close()
        self.handler = None
