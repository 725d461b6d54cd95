import logging
import os
import sys
from typing import Optional

from dotenv import load_dotenv


def setup_logging(dotenv_path: Optional[str] = None):
    """
    Configures the root logger for octojordan.

    This function is called once when the package is first imported: any module that
    logs imports this module at the top, which runs `setup_logging()` as a side effect.

    Log records go to stderr. Stdout carries the JSON and text results of the command
    line tool and must stay byte-stable between runs. The level comes from the
    LOG_LEVEL environment variable, which a `.env` file may supply, and defaults to
    WARNING. Variables already set in the environment take precedence over `.env`.
    """
    load_dotenv(dotenv_path)
    log_level_str = os.getenv("LOG_LEVEL", "WARNING").upper()
    log_level = getattr(logging, log_level_str, logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Replace handlers installed by an earlier configuration so records are not doubled.
    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    handler.setFormatter(formatter)
    root_logger.addHandler(handler)

    logging.debug(f"Logging has been configured with level {log_level_str}.")


setup_logging()
