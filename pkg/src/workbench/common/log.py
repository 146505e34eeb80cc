"""Utils related to logging."""

import logging
import logging.config

from workbench.common.settings import settings

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: int | None = None) -> None:
    """Send log records of `level` (default: the configured level) to stderr."""
    log_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"simple": {"format": LOG_FORMAT, "datefmt": DATE_FORMAT}},
        "handlers": {
            "stderr": {
                "class": "logging.StreamHandler",
                "formatter": "simple",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {"root": {"level": settings.logging_level if level is None else level, "handlers": ["stderr"]}},
    }

    logging.config.dictConfig(log_config)  # type: ignore[attr-defined]
