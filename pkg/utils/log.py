import os

from logging import FileHandler, Logger, getLogger
from rich.console import Console
from rich.logging import RichHandler


def get_logger() -> Logger:
    """
    Get the application logger and configure it based on environment variables.

    Returns:
        Logger: Configured application logger.
    """

    logger = getLogger("rainbow")

    if not logger.handlers:
        logger.addHandler(
            RichHandler(console=Console(stderr=True), show_path=False)
        )
        logger.setLevel("WARNING")

    if os.environ.get("LOG_LEVEL"):
        logger.setLevel(os.environ["LOG_LEVEL"])

    if os.environ.get("LOG_FILE") and not any(
        isinstance(handler, FileHandler) for handler in logger.handlers
    ):
        file_handler = FileHandler(os.environ["LOG_FILE"])
        logger.addHandler(file_handler)

    if os.environ.get("DEBUG"):
        logger.setLevel("DEBUG")

    return logger
