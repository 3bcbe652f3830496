from pydantic import BaseModel, ConfigDict


class ReportMeta(BaseModel):
    """
    Reproducibility stamp embedded in every output file.

    Args:
        seed (int): Root seed of the run.
        config_hash (str): SHA-256 of the canonical run configuration.
        version (str): Application version.
    """
    model_config = ConfigDict(frozen=True)

    seed: int
    config_hash: str
    version: str
