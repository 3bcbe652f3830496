import logging
from models.config_models import RunConfig
from models.error_models import InputError, OpenValueError
from models.kelly_models import CurvePoint, KellyDecision
from models.portfolio_models import Allocation, CorrelationMatrix
from services.valuation_services import AssetValuation, resolve_market_price
from utils.kelly_utils import kelly_curve, kelly_decision
from utils.portfolio_utils import allocate, correlation_report

logger = logging.getLogger(__name__)


def decide(valuation: AssetValuation, run_config: RunConfig) -> KellyDecision:
    """
    Kelly decision of a valued asset at its market price.
    """
    try:
        market_price: float = resolve_market_price(valuation=valuation, run_config=run_config)
        return kelly_decision(valuation_price=valuation.result.mean_price,
                              valuation_std=valuation.result.std_price,
                              market_price=market_price,
                              wager_cap=run_config.kelly.wager_cap,
                              edge_epsilon=run_config.kelly.edge_epsilon_fraction * valuation.result.mean_price)
    except OpenValueError as error:
        raise error.with_asset(valuation.asset.asset_id)

def build_allocation(valuations: list[AssetValuation], run_config: RunConfig) -> tuple[Allocation, dict[str, KellyDecision]]:
    """
    Kelly decisions of every Dynamic asset aggregated under the ruin cap, with a correlation report.

    Returns:
        tuple[Allocation, dict[str, KellyDecision]]: The allocation and the per-asset decisions.
    """
    dynamic: list[AssetValuation] = []
    for valuation in valuations:
        if valuation.is_dynamic:
            dynamic.append(valuation)
        else:
            logger.info("Skipping %s asset %s: allocation sizes Dynamic assets only.",
                        valuation.asset.kind.value, valuation.asset.asset_id)
    if not dynamic:
        raise InputError("Allocation needs at least one Dynamic asset.")
    decisions: dict[str, KellyDecision] = {valuation.asset.asset_id: decide(valuation=valuation, run_config=run_config)
                                           for valuation in dynamic}
    with_prices: dict[str, list] = {valuation.asset.asset_id: valuation.series.prices for valuation in dynamic
                                    if valuation.series.prices}
    correlation: CorrelationMatrix = correlation_report(price_histories=with_prices) if len(with_prices) > 1 \
        else CorrelationMatrix(asset_ids=sorted(with_prices), values=[[1.0]] * len(with_prices))
    allocation: Allocation = allocate(decisions=decisions, ruin_cap=run_config.portfolio.ruin_cap,
                                      correlation=correlation)
    return allocation, decisions

def build_curve(valuation: AssetValuation, run_config: RunConfig) -> list[CurvePoint]:
    """
    The (market price, wager) weighting curve of a valued asset.
    """
    return kelly_curve(valuation_price=valuation.result.mean_price, valuation_std=valuation.result.std_price,
                       wager_cap=run_config.kelly.wager_cap, n_points=run_config.kelly.curve_points,
                       max_multiple=run_config.kelly.curve_max_multiple)
