from pathlib import Path
from models.config_models import RunConfig
from models.error_models import InputFileError


def validate_run_config_files(run_config: RunConfig) -> None:
    """
    Check that every file referenced by the run configuration exists.

    Raises:
        InputFileError: A fundamentals or price file is missing. The message names the path.
    """
    for asset in run_config.assets:
        for path in (asset.fundamentals, asset.prices):
            if path is not None and not Path(path).is_file():
                raise InputFileError(f'File does not exist: "{path}"', asset_id=asset.asset_id)
