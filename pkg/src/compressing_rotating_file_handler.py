#!/usr/bin/env python
import gzip
import logging.handlers
import shutil
from pathlib import Path
from typing import List


class CompressingRotatingFileHandler(logging.handlers.RotatingFileHandler):
    """
    RotatingFileHandler whose backups are gzip files <log>.1.gz .. <log>.N.gz.
    """

    def doRollover(self) -> None:
        if self.stream:
            self.stream.close()
            self.stream = None

        base = Path(self.baseFilename)
        if self.backupCount > 0:
            for i in range(self.backupCount - 1, 0, -1):
                source = self.backup_path(i)
                if source.exists():
                    source.replace(self.backup_path(i + 1))
            rotated = base.with_name(base.name + ".1")
            if base.exists():
                base.replace(rotated)
                self.compress_log(rotated)

        self.mode = "w"
        self.stream = self._open()
        self.cleanup_old_logs()

    def backup_path(self, index: int) -> Path:
        base = Path(self.baseFilename)
        return base.with_name(f"{base.name}.{index}.gz")

    def compress_log(self, file_path: Path) -> None:
        compressed = file_path.with_name(file_path.name + ".gz")
        with open(file_path, "rb") as f_in, gzip.open(compressed, "wb") as f_out:
            shutil.copyfileobj(f_in, f_out)
        file_path.unlink()

    def backups(self) -> List[Path]:
        base = Path(self.baseFilename)
        return sorted(base.parent.glob(f"{base.name}.*.gz"), key=lambda p: p.stat().st_mtime)

    def cleanup_old_logs(self) -> None:
        files = self.backups()
        while len(files) > self.backupCount:
            files.pop(0).unlink()
