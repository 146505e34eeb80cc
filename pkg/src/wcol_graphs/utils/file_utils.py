"""Parameter files and small helpers shared by the library and the workbench."""

import functools
import logging
import shutil
from importlib import resources
from pathlib import Path

import yaml

logger = logging.getLogger(__name__)

PACKAGE = "wcol_graphs"


def expose_configs() -> Path:
    """Copy the packaged default parameter files into the project's root-level `config` directory.

    ```
    wcol_graphs/config/*_params.yml  ->  project-root/config/*_params.yml
    ```

    Files already present at the destination are overwritten, so local edits should be made after calling this.

    Returns:
        Path: The destination folder.
    """
    destination_folder = find_project_root() / "config"
    destination_folder.mkdir(parents=True, exist_ok=True)
    source_folder = resources.files(PACKAGE).joinpath("config")
    shutil.copytree(source_folder, destination_folder, dirs_exist_ok=True)
    return destination_folder


def find_project_root() -> Path:
    """Find the project root by looking for a pyproject.toml or setup.py next to the sources.

    Returns:
        Path: Detected root path, or the grandparent of the package if no marker is found.
    """
    current = Path(__file__).resolve()
    for parent in current.parents:
        if (parent / "pyproject.toml").exists() or (parent / "setup.py").exists():
            return parent
    return current.parents[2]


@functools.cache
def read_params(config_filename: str) -> dict:
    """Read parameters from a YAML config file.

    A file in `project-root/config/` takes precedence over the default shipped in `wcol_graphs/config/`.

    Args:
        config_filename (str): Name of the config yaml file, e.g. "search_params.yml".

    Returns:
        dict: The parsed parameters. Callers must not mutate the returned mapping.
    """
    config_path = find_project_root() / "config" / config_filename
    if config_path.exists():
        logger.debug("Reading %s from %s", config_filename, config_path)
        with open(config_path) as f:
            return yaml.safe_load(f)

    try:
        config_data = resources.files(PACKAGE).joinpath(f"config/{config_filename}").read_text()
        return yaml.safe_load(config_data)
    except Exception as e:
        raise FileNotFoundError(f"Config {config_filename} not found") from e
