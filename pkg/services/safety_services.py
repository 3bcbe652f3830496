import logging
from collections.abc import Sequence
from models.config_models import RunConfig
from models.error_models import NonPositivePrice, OpenValueError
from models.safety_models import RiskPoint, SafetyReport
from models.valuation_models import GrowthConstant
from services.valuation_services import AssetValuation, resolve_market_price
from utils.safety_utils import (efficient_set, gb_ratio, margin_of_safety_classic, margin_of_safety_delta,
                                price_dispersion)
from utils.portfolio_utils import screen
from utils.valuation_utils import growth_constant, implied_rate, price_multiple

logger = logging.getLogger(__name__)


def safety_report(asset_id: str, rate: float, valuation_price: float, market_price: float, first_flow: float,
                  prices: Sequence[float], dispersion_window: int = 252, use_variance: bool = False) -> SafetyReport:
    """
    Builds the margin of safety report of an asset from its valuation and market price.

    The valuation's price multiple fixes the growth constant c against N; the market price, expressed in
    the same unit, then implies M. delta = 1 - N/M and S = 1 - P_m/P_t.

    Args:
        asset_id (str): The asset the report belongs to.
        rate (float): The investor's rate N.
        valuation_price (float): Intrinsic price P_t in currency.
        market_price (float): Market price P_m in currency.
        first_flow (float): Expected first-period flow, the unit of the price multiples.
        prices (Sequence[float]): Price history for the dispersion.
        dispersion_window (int, optional): Trailing window of log price relatives. Defaults to 252.
        use_variance (bool, optional): Report the variance instead of the standard deviation. Defaults to False.

    Returns:
        SafetyReport: N, M, delta, S, dispersion and GB-ratio.
    """
    if not market_price > 0:
        raise NonPositivePrice(f"Market price must be positive. Got: {market_price}")
    valuation_multiple: float = price_multiple(value=valuation_price, first_flow=first_flow, rate=rate)
    constant: GrowthConstant = growth_constant(price=valuation_multiple, rate=rate)
    market_multiple: float = price_multiple(value=market_price, first_flow=first_flow, rate=rate)
    market_rate: float = implied_rate(market_price=market_multiple, c=constant)
    delta: float = margin_of_safety_delta(nrr=rate, market_rate=market_rate)
    dispersion: float = price_dispersion(prices=prices, window=dispersion_window, use_variance=use_variance)
    return SafetyReport(
        asset_id=asset_id,
        N=rate,
        M=market_rate,
        delta=delta,
        classic_s=margin_of_safety_classic(valuation_price=valuation_price, market_price=market_price),
        price_dispersion=dispersion,
        gb_ratio=gb_ratio(delta=delta, dispersion=dispersion) if dispersion > 0 else None,
        growth_constant=constant.c,
        valuation_price=valuation_price,
        market_price=market_price
    )

def build_safety_report(valuation: AssetValuation, run_config: RunConfig) -> SafetyReport:
    """
    Safety report of a valued Dynamic asset at its resolved market price.
    """
    asset_id: str = valuation.asset.asset_id
    try:
        market_price: float = resolve_market_price(valuation=valuation, run_config=run_config)
        return safety_report(asset_id=asset_id, rate=run_config.nrr.N,
                             valuation_price=valuation.result.mean_price, market_price=market_price,
                             first_flow=valuation.result.first_flow,
                             prices=[point.price for point in valuation.series.prices],
                             dispersion_window=run_config.safety.dispersion_window,
                             use_variance=run_config.safety.use_variance)
    except OpenValueError as error:
        raise error.with_asset(asset_id)

def build_safety_reports(valuations: list[AssetValuation], run_config: RunConfig) -> dict[str, SafetyReport]:
    """
    Safety reports of every Dynamic asset, keyed by asset id. Other kinds are skipped.
    """
    reports: dict[str, SafetyReport] = {}
    for valuation in valuations:
        if not valuation.is_dynamic:
            logger.info("Skipping %s asset %s: margin of safety needs a Dynamic asset.",
                        valuation.asset.kind.value, valuation.asset.asset_id)
            continue
        reports[valuation.asset.asset_id] = build_safety_report(valuation=valuation, run_config=run_config)
    return reports

def screen_assets(reports: dict[str, SafetyReport], run_config: RunConfig) -> tuple[list[str], list[RiskPoint], list[str]]:
    """
    GB-ratio screening plus the (delta, sigma) efficient set.

    Returns:
        tuple[list[str], list[RiskPoint], list[str]]: (screened asset ids best first, efficient set, assets with zero dispersion).
    """
    screened: list[str] = screen(reports=reports, min_gb=run_config.portfolio.min_gb)
    points: list[RiskPoint] = [RiskPoint(asset_id=asset_id, delta=report.delta, sigma=report.price_dispersion)
                               for asset_id, report in sorted(reports.items())]
    efficient: list[RiskPoint] = efficient_set(points=points, include_negative=run_config.safety.include_negative)
    zero_dispersion: list[str] = sorted(asset_id for asset_id, report in reports.items() if report.gb_ratio is None)
    return screened, efficient, zero_dispersion
