import logging
import os
import sys

import pytest

import logging_config


@pytest.fixture
def restore_logging(monkeypatch):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    yield
    os.environ.pop("LOG_LEVEL", None)
    logging_config.setup_logging()


def test_level_from_dotenv_file(tmp_path, restore_logging):
    dotenv = tmp_path / ".env"
    dotenv.write_text("LOG_LEVEL=DEBUG\n")
    logging_config.setup_logging(str(dotenv))
    assert logging.getLogger().level == logging.DEBUG


def test_environment_overrides_dotenv_file(tmp_path, monkeypatch, restore_logging):
    dotenv = tmp_path / ".env"
    dotenv.write_text("LOG_LEVEL=DEBUG\n")
    monkeypatch.setenv("LOG_LEVEL", "ERROR")
    logging_config.setup_logging(str(dotenv))
    assert logging.getLogger().level == logging.ERROR


def test_defaults_to_warning_on_stderr(tmp_path, restore_logging):
    logging_config.setup_logging(str(tmp_path / "missing.env"))
    root = logging.getLogger()
    assert root.level == logging.WARNING
    assert len(root.handlers) == 1
    assert root.handlers[0].stream is sys.stderr
