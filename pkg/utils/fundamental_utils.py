import math
import numpy as np
from models.error_models import GrowthMeanAtUnity, TooFewPeriods
from models.fundamental_models import DriftReport, FactorDrift, FactorStats, FundamentalSeries, NormalizedFactors
from utils.stats_utils import sample_mean_std
from validators.fundamental_validators import validate_series_for_normalization

GROWTH_EPSILON: float = 1e-9


def revenue_growth(previous_revenue: float, revenue: float) -> float:
    """
    Percent growth in revenue, measured against the current period: g(t) = (R(t) - R(t-1)) / R(t).

    NOTE: The denominator is R(t), not R(t-1). project_revenue is its exact inverse.

    Args:
        previous_revenue (float): R(t-1).
        revenue (float): R(t), strictly positive.

    Returns:
        float: The growth g(t). Always below 1 for positive revenues.
    """
    return (revenue - previous_revenue) / revenue

def project_revenue(previous_revenue: float, growth_mean: float) -> float:
    """
    Projects the next revenue with R(t) = R(t-1) / (1 - g-bar).

    Args:
        previous_revenue (float): R(t-1).
        growth_mean (float): Mean growth g-bar, below 1.

    Returns:
        float: The projected revenue R(t).
    """
    if growth_mean >= 1 - GROWTH_EPSILON:
        raise GrowthMeanAtUnity(f"Mean growth {growth_mean} is at or above 1; the projection diverges.")
    return previous_revenue / (1 - growth_mean)

def project_factor(revenue: float, factor_mean: float) -> float:
    """
    Projects a fundamental factor from its historical revenue share: f_i(t) = R(t) * mu_i.
    """
    return revenue * factor_mean

def project_revenue_path(start_revenue: float, growth_mean: float, horizon: int) -> list[float]:
    """
    Projects revenue for periods 1..horizon starting from R_0.

    Args:
        start_revenue (float): R_0, the latest observed revenue.
        growth_mean (float): Growth applied each period.
        horizon (int): Number of projected periods.

    Returns:
        list[float]: [R(1), ..., R(horizon)].
    """
    path: list[float] = []
    revenue: float = start_revenue
    for _ in range(horizon):
        revenue = project_revenue(previous_revenue=revenue, growth_mean=growth_mean)
        path.append(revenue)
    return path

def clip_to_quantiles(values: np.ndarray, quantile: float) -> np.ndarray:
    """
    Winsorizes a vector to its [quantile, 1 - quantile] range.
    """
    low, high = np.quantile(values, [quantile, 1 - quantile])
    return np.clip(values, low, high)

def normalize(series: FundamentalSeries, growth_clip_quantile: float | None = None) -> NormalizedFactors:
    """
    Computes revenue-normalized factor statistics and revenue growth statistics.

    Every factor is expressed as its share of revenue f_i(t)/R(t). The first period contributes
    factor samples but no growth sample.

    Args:
        series (FundamentalSeries): A Dynamic asset panel with at least three periods.
        growth_clip_quantile (float | None, optional): Winsorize growth samples before averaging. Defaults to None (off).

    Returns:
        NormalizedFactors: The normalized statistics.
    """
    validate_series_for_normalization(series=series)
    revenues: np.ndarray = np.array([period.revenue for period in series.periods], dtype=np.float64)
    samples: dict[str, list[float]] = {}
    factor_stats: dict[str, FactorStats] = {}
    for name in series.factor_names:
        values: np.ndarray = np.array([period.factors[name] for period in series.periods], dtype=np.float64)
        shares: np.ndarray = values / revenues
        samples[name] = shares.tolist()
        mean, std = sample_mean_std(samples[name])
        factor_stats[name] = FactorStats(mean=mean, std=std)
    growth: np.ndarray = (revenues[1:] - revenues[:-1]) / revenues[1:]
    if growth_clip_quantile:
        growth = clip_to_quantiles(values=growth, quantile=growth_clip_quantile)
    growth_samples: list[float] = growth.tolist()
    growth_mean, growth_std = sample_mean_std(growth_samples)
    if growth_mean >= 1 - GROWTH_EPSILON:
        raise GrowthMeanAtUnity(f"Mean growth {growth_mean} is at or above 1; the projection diverges.",
                                asset_id=series.asset_id)
    return NormalizedFactors(
        asset_id=series.asset_id,
        factor_stats=factor_stats,
        growth_mean=growth_mean,
        growth_std=growth_std,
        samples=samples,
        growth_samples=growth_samples,
        last_revenue=float(revenues[-1])
    )

def measure_drift(name: str, values: list[float], window: int, z_threshold: float) -> FactorDrift:
    """
    Standardized shift of the last `window` values against the values before them.
    """
    history: list[float] = values[:-window]
    recent: list[float] = values[-window:]
    historical_mean, historical_std = sample_mean_std(history)
    recent_mean: float = float(np.mean(recent))
    shift: float = recent_mean - historical_mean
    # No dispersion in the history: any shift at all is a drift.
    if historical_std == 0:
        return FactorDrift(name=name, historical_mean=historical_mean, recent_mean=recent_mean,
                           z_score=None, drifted=shift != 0)
    z_score: float = shift / (historical_std / math.sqrt(window))
    return FactorDrift(name=name, historical_mean=historical_mean, recent_mean=recent_mean,
                       z_score=z_score, drifted=abs(z_score) > z_threshold)

def detect_factor_drift(series: FundamentalSeries, window: int = 3, z_threshold: float = 2.0,
                        growth_clip_quantile: float | None = None) -> DriftReport:
    """
    Monitors whether the normalized operating structure of an asset still matches its history.

    The mean of each normalized factor (and of revenue growth) over the latest `window` periods is
    compared with the statistics of the earlier periods. A factor drifts when the shift exceeds
    `z_threshold` standard errors.

    Args:
        series (FundamentalSeries): A Dynamic asset panel.
        window (int, optional): Number of recent periods. Defaults to 3.
        z_threshold (float, optional): Flagging threshold. Defaults to 2.0.
        growth_clip_quantile (float | None, optional): Passed to normalize. Defaults to None (off).

    Returns:
        DriftReport: Per factor drift and the overall stable flag.
    """
    normalized: NormalizedFactors = normalize(series=series, growth_clip_quantile=growth_clip_quantile)
    if window < 1 or len(normalized.growth_samples) < window + 2:
        raise TooFewPeriods(f"Drift monitoring with window {window} needs at least {window + 3} periods; "
                            f"got {len(series.periods)}.", asset_id=series.asset_id)
    drifts: list[FactorDrift] = [measure_drift(name=name, values=normalized.samples[name], window=window,
                                               z_threshold=z_threshold) for name in normalized.factor_names]
    drifts.append(measure_drift(name="growth", values=normalized.growth_samples, window=window,
                                z_threshold=z_threshold))
    return DriftReport(asset_id=series.asset_id, window=window, z_threshold=z_threshold, factors=drifts,
                       stable=not any(drift.drifted for drift in drifts))
