from enum import Enum
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from models.fundamental_models import AssetKind
from models.simulation_models import SimulationConfig
from models.valuation_models import NRRConfig


def must_be_a_fraction(cls, v):
    if not 0 < v <= 1:
        raise ValueError(f"Value must lie in (0, 1]. Got: {v}")
    return v

def must_be_non_negative(cls, v):
    if v < 0:
        raise ValueError(f"Value must be non-negative. Got: {v}")
    return v

def must_be_positive_count(cls, v):
    if v < 1:
        raise ValueError(f"Value must be at least 1. Got: {v}")
    return v

def must_be_positive(cls, v):
    if not v > 0:
        raise ValueError(f"Value must be positive. Got: {v}")
    return v

class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"

class ApiConfig(BaseModel):
    host: str
    port: int

class AssetConfig(BaseModel):
    """
    One asset entry of a run configuration.

    Args:
        asset_id (str): Unique identifier, used in every report.
        kind (AssetKind): Asset category. Defaults to Dynamic.
        fundamentals (str | None): Path of the fundamentals CSV (required for Dynamic assets).
        prices (str | None): Path of the price CSV.
        maturity (int | None): Term in periods (Discrete assets).
        coupon (float | None): Per period coupon (Discrete assets).
        face_value (float | None): Face amount (Discrete and Cash assets).
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    kind: AssetKind = AssetKind.DYNAMIC
    fundamentals: str | None = None
    prices: str | None = None
    maturity: int | None = None
    coupon: float | None = None
    face_value: float | None = None

    @model_validator(mode='after')
    def check_kind_requirements(self):
        if self.kind == AssetKind.DYNAMIC and self.fundamentals is None:
            raise ValueError(f"Dynamic asset '{self.asset_id}' needs a fundamentals file.")
        if self.kind == AssetKind.DISCRETE:
            if self.maturity is None or self.maturity < 1:
                raise ValueError(f"Discrete asset '{self.asset_id}' needs a finite maturity term.")
            if self.coupon is None or self.face_value is None:
                raise ValueError(f"Discrete asset '{self.asset_id}' needs a coupon and a face value.")
        if self.kind == AssetKind.CASH and self.face_value is None:
            raise ValueError(f"Cash asset '{self.asset_id}' needs a face value.")
        return self

class NormalizationConfig(BaseModel):
    """
    Args:
        growth_clip_quantile (float | None): Clip growth samples to [q, 1-q] quantiles before averaging. Off by default.
        drift_window (int): Recent periods compared with the history by drift monitoring, at least 1. Defaults to 3.
        drift_z_threshold (float): Standard errors of shift that flag a drift, positive. Defaults to 2.0.
    """
    model_config = ConfigDict(frozen=True)

    growth_clip_quantile: float | None = None
    drift_window: int = 3
    drift_z_threshold: float = 2.0

    _drift_window_validator = field_validator('drift_window')(must_be_positive_count)
    _drift_z_threshold_validator = field_validator('drift_z_threshold')(must_be_positive)

    @field_validator('growth_clip_quantile')
    @classmethod
    def quantile_must_be_below_half(cls, v):
        if v is not None and not 0 <= v < 0.5:
            raise ValueError(f"growth_clip_quantile must lie in [0, 0.5). Got: {v}")
        return v

class KellyConfig(BaseModel):
    """
    Args:
        wager_cap (float): Largest published wager (fractional Kelly). Defaults to 0.25.
        edge_epsilon_fraction (float): Exit threshold on |edge| as a fraction of P_t. Defaults to 1e-6.
        curve_points (int): Points of the emitted weighting curve. Defaults to 101.
        curve_max_multiple (float): The curve spans market prices [0, curve_max_multiple * P_t]. Defaults to 2.0.
    """
    model_config = ConfigDict(frozen=True)

    wager_cap: float = 0.25
    edge_epsilon_fraction: float = 1e-6
    curve_points: int = 101
    curve_max_multiple: float = 2.0

    _wager_cap_validator = field_validator('wager_cap')(must_be_a_fraction)
    _edge_epsilon_validator = field_validator('edge_epsilon_fraction')(must_be_non_negative)

class PortfolioConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    ruin_cap: float = 0.8
    min_gb: float = 0.0

    _ruin_cap_validator = field_validator('ruin_cap')(must_be_a_fraction)

class SafetyConfig(BaseModel):
    """
    Args:
        dispersion_window (int): Most recent prices used for the dispersion. Defaults to 252.
        use_variance (bool): Use the variance instead of the standard deviation of log returns. Defaults to False.
        include_negative (bool): Keep negative-delta assets in the efficient set. Defaults to False.
    """
    model_config = ConfigDict(frozen=True)

    dispersion_window: int = 252
    use_variance: bool = False
    include_negative: bool = False

class RunConfig(BaseModel):
    """
    Complete configuration of a batch run. Paths are absolute once loaded.
    """
    model_config = ConfigDict(frozen=True)

    assets: list[AssetConfig]
    nrr: NRRConfig
    simulation: SimulationConfig = SimulationConfig()
    normalization: NormalizationConfig = NormalizationConfig()
    kelly: KellyConfig = KellyConfig()
    portfolio: PortfolioConfig = PortfolioConfig()
    safety: SafetyConfig = SafetyConfig()
    market_prices: dict[str, float] = {}
    output_dir: str = "out"
    output_format: OutputFormat = OutputFormat.JSON

    @field_validator('assets')
    @classmethod
    def asset_ids_must_be_unique(cls, v):
        asset_ids: list[str] = [asset.asset_id for asset in v]
        if not asset_ids:
            raise ValueError("At least one asset is required.")
        if len(set(asset_ids)) != len(asset_ids):
            raise ValueError(f"Asset ids must be unique. Got: {asset_ids}")
        return v
