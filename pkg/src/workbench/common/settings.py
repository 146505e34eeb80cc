"""Runtime settings of the workbench."""

import logging
from pathlib import Path

import dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from workbench import DATAPATH

dotenv.load_dotenv(override=True)


class WorkbenchSettings(BaseSettings):
    """Settings read from `WCOL_*` environment variables or a `.env` file."""

    model_config = SettingsConfigDict(env_prefix="WCOL_")

    ###########################################################
    # Logging
    ###########################################################
    logging_level: int = logging.INFO

    ###########################################################
    # Outputs
    ###########################################################
    output_directory: Path = DATAPATH / "output"
    seed: int | None = None
    progress: bool = True


settings = WorkbenchSettings()
