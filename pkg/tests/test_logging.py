import gzip
import logging

from fs import FS
from logging_manager import LoggingManager


def test_fs_creates_data_tree(tmp_path):
    fs = FS(tmp_path)
    for folder in (fs.data_folder, fs.logs_folder, fs.reports_folder, fs.tables_folder):
        assert folder.is_dir()
    assert fs.get_reports() == []


def test_logging_manager_writes_file(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    manager = LoggingManager(log_file)
    manager.setup()
    try:
        logging.info("suite started")
    finally:
        manager.shutdown()
    text = log_file.read_text(encoding="utf-8")
    assert "INFO suite started" in text
    assert "Logging system shutdown" in text


def test_repeated_setup_keeps_one_handler(tmp_path):
    manager = LoggingManager(tmp_path / "run.log")
    manager.setup()
    manager.setup()
    try:
        assert logging.getLogger().handlers == [manager.handler]
    finally:
        manager.shutdown()


def test_rollover_compresses_backups(tmp_path):
    log_file = tmp_path / "run.log"
    manager = LoggingManager(log_file)
    manager.setup(max_bytes=200, backup_count=2)
    try:
        for i in range(40):
            logging.info(f"line {i} " + "x" * 40)
    finally:
        manager.shutdown()
    backups = sorted(tmp_path.glob("run.log.*.gz"))
    assert 1 <= len(backups) <= 2
    with gzip.open(tmp_path / "run.log.1.gz", "rt", encoding="utf-8") as f:
        assert "line" in f.read()


def test_context_manager_closes_handler(tmp_path):
    log_file = tmp_path / "logs" / "cbi.log"
    with LoggingManager(log_file) as manager:
        assert logging.getLogger().handlers == [manager.handler]
        assert logging.getLogger("joblib").level == logging.WARNING
        logging.debug("hidden at INFO")
    assert manager.handler is None
    text = log_file.read_text(encoding="utf-8")
    assert "Logging to" in text
    assert "hidden at INFO" not in text
