from enum import Enum
from pydantic import BaseModel, ConfigDict


class AssetKind(str, Enum):
    """
    Enum class for the three asset categories. Only Dynamic assets are Monte-Carlo valued.
    """
    CASH = "Cash"
    DISCRETE = "Discrete"
    DYNAMIC = "Dynamic"

class PeriodRecord(BaseModel):
    """
    One row of a fundamentals panel.

    Args:
        period_index (int): Integer time step of the row.
        revenue (float): Revenue R(t) for the period.
        factors (dict[str, float]): Named fundamental factors f_i(t) in the same currency as revenue.
    """
    model_config = ConfigDict(frozen=True)

    period_index: int
    revenue: float
    factors: dict[str, float]

class PricePoint(BaseModel):
    """
    A single observed market price.

    Args:
        period_index (int): Integer time step of the observation.
        price (float): Market price per share or per unit.
    """
    model_config = ConfigDict(frozen=True)

    period_index: int
    price: float

class FundamentalSeries(BaseModel):
    """
    Historical panel of revenue, fundamental factors and market prices for one asset.

    Args:
        asset_id (str): Unique identifier of the asset.
        kind (AssetKind): Asset category. Defaults to Dynamic.
        periods (list[PeriodRecord]): Fundamentals ordered by period_index.
        prices (list[PricePoint]): Market prices ordered by period_index.
        maturity (int | None): Finite term in periods, required for Discrete assets.
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    kind: AssetKind = AssetKind.DYNAMIC
    periods: list[PeriodRecord] = []
    prices: list[PricePoint] = []
    maturity: int | None = None

    @property
    def factor_names(self) -> list[str]:
        if not self.periods: return []
        return sorted(self.periods[0].factors.keys())

    @property
    def latest_price(self) -> float | None:
        if not self.prices: return None
        return self.prices[-1].price

class FactorStats(BaseModel):
    """
    Sample statistics of one revenue-normalized factor.

    Args:
        mean (float): Arithmetic mean mu_i of f_i(t)/R(t).
        std (float): Sample standard deviation sigma_i (divisor n-1).
    """
    model_config = ConfigDict(frozen=True)

    mean: float
    std: float

class NormalizedFactors(BaseModel):
    """
    Revenue-relative factor statistics and revenue growth statistics of an asset.

    Args:
        asset_id (str): The asset the statistics were computed for.
        factor_stats (dict[str, FactorStats]): Per factor mean and standard deviation.
        growth_mean (float): Mean percent growth in revenue g-bar.
        growth_std (float): Sample standard deviation of the growth samples.
        samples (dict[str, list[float]]): Per factor, the normalized values f_i(t)/R(t) in period order.
        growth_samples (list[float]): The growth samples g(t), one per period with a predecessor.
        last_revenue (float): Revenue of the latest period, the starting point R_0 of projections.
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    factor_stats: dict[str, FactorStats]
    growth_mean: float
    growth_std: float
    samples: dict[str, list[float]]
    growth_samples: list[float]
    last_revenue: float

    @property
    def factor_names(self) -> list[str]:
        return sorted(self.factor_stats.keys())

    def means(self) -> dict[str, float]:
        return {name: stats.mean for name, stats in self.factor_stats.items()}

class FactorDrift(BaseModel):
    """
    Standardized shift of a recent window of a normalized factor against its earlier history.

    Args:
        name (str): Factor name, or "growth" for revenue growth.
        historical_mean (float): Mean over the periods before the window.
        recent_mean (float): Mean over the window.
        z_score (float | None): Shift in standard errors. None when the history has no dispersion and no shift.
        drifted (bool): True if |z_score| exceeds the threshold.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    historical_mean: float
    recent_mean: float
    z_score: float | None
    drifted: bool

class DriftReport(BaseModel):
    """
    Result of monitoring an asset's normalized operating structure.

    Args:
        asset_id (str): The monitored asset.
        window (int): Number of most recent periods compared against the earlier history.
        z_threshold (float): Threshold used to flag a factor.
        factors (list[FactorDrift]): Per factor drift, growth last.
        stable (bool): True if no factor drifted.
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    window: int
    z_threshold: float
    factors: list[FactorDrift]
    stable: bool
