#!/usr/bin/env python
import logging
from pathlib import Path
from typing import List, Optional


class FS:
    """
    Owns the data/ tree: logs, suite reports and generated tables.
    """
    def __init__(self, root: Optional[Path] = None) -> None:
        self.root: Path = root or self.get_project_root()
        self.data_folder: Path = self.root / "data"
        self.logs_folder: Path = self.data_folder / "logs"
        self.reports_folder: Path = self.data_folder / "reports"
        self.tables_folder: Path = self.data_folder / "tables"
        self.create_directories()

    def get_project_root(self) -> Path:
        """
        Determines the project root directory.

        Returns:
            Path object pointing to the project root
        """
        # This file lives in src/; the project root is its parent.
        return Path(__file__).resolve().parent.parent

    def create_directories(self) -> None:
        for folder in (self.data_folder, self.logs_folder, self.reports_folder, self.tables_folder):
            self._create_directory(folder)

    def _create_directory(self, directory: Path) -> None:
        directory.mkdir(parents=True, exist_ok=True)
        logging.debug(f"Ensured directory exists: {directory}")

    def get_reports(self) -> List[Path]:
        """JSON reports written so far, sorted by name."""
        return sorted(self.reports_folder.glob("*.json"))
