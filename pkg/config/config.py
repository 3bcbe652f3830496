import json
from os import getenv
from pathlib import Path
from typing import Any
from dotenv import load_dotenv
from pydantic import ValidationError
from models.config_models import ApiConfig, OutputFormat, RunConfig
from models.error_models import ConfigError, InputFileError

APP_VERSION: str = "0.1.0"


class Config:
    """
    Used to load and store the environment variables of the HTTP service.
    """
    api_config: ApiConfig
    log_level: str

    def __init__(self):
        self.__load_environment_variables()

    def __load_environment_variables(self):
        """
        Loads the environment variables.
        """
        load_dotenv(override=True)
        self.api_config = ApiConfig(
            host=getenv("VALUE_API_HOST", "127.0.0.1"),
            port=int(getenv("VALUE_API_PORT", "8000"))
        )
        self.log_level = getenv("VALUE_LOG_LEVEL", "INFO").upper()


def resolve_asset_paths(raw_config: dict[str, Any], base_dir: Path) -> dict[str, Any]:
    """
    Makes the fundamentals and prices paths of every asset absolute, relative to the config file.
    """
    assets: list[dict[str, Any]] = []
    for asset in raw_config.get("assets", []):
        resolved: dict[str, Any] = dict(asset)
        for key in ("fundamentals", "prices"):
            if resolved.get(key) is not None:
                resolved[key] = str((base_dir / resolved[key]).resolve())
        assets.append(resolved)
    return {**raw_config, "assets": assets}

def load_run_config(path: str | Path, seed: int | None = None, output_dir: str | None = None,
                    output_format: str | None = None) -> RunConfig:
    """
    Loads a JSON run configuration and applies command-line overrides.

    Args:
        path (str | Path): The JSON config file.
        seed (int | None, optional): Overrides simulation.seed. Defaults to None.
        output_dir (str | None, optional): Overrides output_dir. Defaults to None.
        output_format (str | None, optional): Overrides output_format. Defaults to None.

    Returns:
        RunConfig: The validated configuration with absolute asset paths.
    """
    config_path: Path = Path(path)
    if not config_path.is_file():
        raise InputFileError(f'Config file does not exist: "{config_path}"')
    try:
        raw_config: dict[str, Any] = json.loads(config_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as error:
        raise ConfigError(f'Could not parse config "{config_path}": {error}') from error
    if not isinstance(raw_config, dict):
        raise ConfigError(f'Config "{config_path}" must hold a JSON object.')
    raw_config = resolve_asset_paths(raw_config=raw_config, base_dir=config_path.parent)
    if seed is not None:
        raw_config["simulation"] = {**raw_config.get("simulation", {}), "seed": seed}
    if output_dir is not None:
        raw_config["output_dir"] = output_dir
    if output_format is not None:
        raw_config["output_format"] = OutputFormat(output_format).value
    try:
        return RunConfig.model_validate(raw_config)
    except ValidationError as error:
        raise ConfigError(f'Invalid config "{config_path}": {error}') from error
