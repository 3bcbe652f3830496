import logging
from models.config_models import AssetConfig, RunConfig
from models.error_models import InputError, NumericalError, OpenValueError, TooFewPeriods
from models.fundamental_models import AssetKind, DriftReport, FundamentalSeries, NormalizedFactors
from models.simulation_models import PriceDistribution
from models.valuation_models import ValuationResult
from utils.fundamental_utils import detect_factor_drift, normalize
from utils.montecarlo_utils import CASHFLOW_MAPS, mean_flow_path, simulate_valuation
from utils.valuation_utils import cash_value, discrete_value, growth_constant, price_multiple
from validators.fundamental_validators import validate_prices_positive

logger = logging.getLogger(__name__)


class AssetValuation:
    """
    Everything the pipeline learns about one asset while valuing it.
    """
    asset: AssetConfig
    series: FundamentalSeries
    result: ValuationResult
    distribution: PriceDistribution | None
    drift: DriftReport | None

    def __init__(self, asset: AssetConfig, series: FundamentalSeries, result: ValuationResult,
                 distribution: PriceDistribution | None = None, drift: DriftReport | None = None) -> None:
        self.asset = asset
        self.series = series
        self.result = result
        self.distribution = distribution
        self.drift = drift

    @property
    def is_dynamic(self) -> bool:
        return self.asset.kind == AssetKind.DYNAMIC


def monitor_asset(series: FundamentalSeries, run_config: RunConfig) -> DriftReport | None:
    """
    Drift report of a Dynamic asset, None when the history is too short to split.
    """
    try:
        return detect_factor_drift(series=series, window=run_config.normalization.drift_window,
                                   z_threshold=run_config.normalization.drift_z_threshold,
                                   growth_clip_quantile=run_config.normalization.growth_clip_quantile)
    except TooFewPeriods:
        logger.debug("%s: history too short for drift monitoring.", series.asset_id)
        return None

def value_dynamic_asset(asset: AssetConfig, series: FundamentalSeries, run_config: RunConfig) -> AssetValuation:
    """
    Normalizes the fundamentals, samples the price distribution and derives the growth constant.

    Args:
        asset (AssetConfig): The configured asset.
        series (FundamentalSeries): Its loaded panel.
        run_config (RunConfig): The run configuration.

    Returns:
        AssetValuation: The valuation with its distribution and drift report.
    """
    rate: float = run_config.nrr.N
    factors: NormalizedFactors = normalize(series=series,
                                           growth_clip_quantile=run_config.normalization.growth_clip_quantile)
    distribution: PriceDistribution = simulate_valuation(factors=factors, start_revenue=factors.last_revenue,
                                                         rate=rate, config=run_config.simulation,
                                                         tail_tolerance=run_config.nrr.tail_tolerance)
    first_flow: float = mean_flow_path(factors=factors, start_revenue=factors.last_revenue, horizon=1,
                                       cashflow_map=CASHFLOW_MAPS[run_config.simulation.cashflow_map])[0]
    multiple: float | None = None
    constant: float | None = None
    try:
        multiple = price_multiple(value=distribution.mean, first_flow=first_flow, rate=rate)
        constant = growth_constant(price=multiple, rate=rate).c
    except NumericalError as error:
        logger.warning("%s: no growth constant for this valuation (%s).", asset.asset_id, error)
    result: ValuationResult = ValuationResult(
        asset_id=asset.asset_id,
        kind=asset.kind.value,
        mean_price=distribution.mean,
        std_price=distribution.std,
        first_flow=first_flow,
        price_multiple=multiple,
        growth_constant=constant,
        n_samples=len(distribution.samples),
        rejected_samples=distribution.rejected,
        sample_min=min(distribution.samples),
        sample_max=max(distribution.samples)
    )
    return AssetValuation(asset=asset, series=series, result=result, distribution=distribution,
                          drift=monitor_asset(series=series, run_config=run_config))

def value_static_asset(asset: AssetConfig, series: FundamentalSeries, run_config: RunConfig) -> AssetValuation:
    """
    Values a Discrete asset from its coupon path or a Cash asset at face. Both have zero dispersion.
    """
    if asset.kind == AssetKind.DISCRETE:
        price: float = discrete_value(coupon=asset.coupon, face_value=asset.face_value, maturity=asset.maturity,
                                      rate=run_config.nrr.N)
    else:
        price = cash_value(face_value=asset.face_value)
    result: ValuationResult = ValuationResult(asset_id=asset.asset_id, kind=asset.kind.value, mean_price=price,
                                              std_price=0.0, sample_min=price, sample_max=price)
    return AssetValuation(asset=asset, series=series, result=result)

def value_asset(asset: AssetConfig, series: FundamentalSeries, run_config: RunConfig) -> AssetValuation:
    """
    Values one asset according to its kind, tagging any error with the asset id.
    """
    logger.debug("Valuing %s (%s).", asset.asset_id, asset.kind.value)
    try:
        validate_prices_positive(prices=series.prices, asset_id=asset.asset_id)
        if asset.kind == AssetKind.DYNAMIC:
            valuation: AssetValuation = value_dynamic_asset(asset=asset, series=series, run_config=run_config)
        else:
            valuation = value_static_asset(asset=asset, series=series, run_config=run_config)
    except OpenValueError as error:
        raise error.with_asset(asset.asset_id)
    logger.debug("Valued %s at %r.", asset.asset_id, valuation.result.mean_price)
    return valuation

def resolve_market_price(valuation: AssetValuation, run_config: RunConfig) -> float:
    """
    The market price of an asset: the configured override, else the latest observed price.
    """
    asset_id: str = valuation.asset.asset_id
    if asset_id in run_config.market_prices:
        return run_config.market_prices[asset_id]
    latest: float | None = valuation.series.latest_price
    if latest is None:
        raise InputError("No market price: the asset has no price history and no configured override.",
                         asset_id=asset_id)
    return latest
