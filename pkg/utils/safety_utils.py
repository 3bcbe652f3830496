import logging
from collections.abc import Sequence
import numpy as np
from models.error_models import NonPositivePrice, NonPositiveValuation, TooFewPrices, ZeroDispersion
from models.safety_models import RiskPoint
from utils.stats_utils import log_returns, sample_mean_std

logger = logging.getLogger(__name__)


def margin_of_safety_delta(nrr: float, market_rate: float) -> float:
    """
    Margin of safety delta = 1 - N/M. Positive iff the market offers a higher rate than required.

    Args:
        nrr (float): The investor's normalized rate of return N.
        market_rate (float): The market-implied rate M.

    Returns:
        float: delta.
    """
    return 1.0 - nrr / market_rate

def market_multiple(market_rate: float) -> float:
    """The market multiple PM = 1/M."""
    return 1.0 / market_rate

def margin_of_safety_multiple(nrr_multiple: float, market_multiple_value: float) -> float:
    """
    The "terms of the deal": (NRRM - MM) / NRRM = 1 - MM / NRRM.
    """
    return (nrr_multiple - market_multiple_value) / nrr_multiple

def margin_of_safety_classic(valuation_price: float, market_price: float) -> float:
    """
    Classic percentage margin of safety S = 1 - P_market / P_valuation.
    """
    if not valuation_price > 0:
        raise NonPositiveValuation(f"Valuation must be positive. Got: {valuation_price}")
    return 1.0 - market_price / valuation_price

def gb_ratio(delta: float, dispersion: float) -> float:
    """
    Ratio of the margin of safety to the historical price dispersion.

    Raises:
        ZeroDispersion: dispersion is 0, the ratio is undefined.
    """
    if dispersion == 0:
        raise ZeroDispersion("Price dispersion is zero; the GB-ratio is undefined.")
    return delta / dispersion

def price_dispersion(prices: Sequence[float], window: int, use_variance: bool = False) -> float:
    """
    Sample standard deviation (divisor n-1) of one-period log price relatives over the latest `window` prices.

    A window longer than the series uses every price. Two prices give a single return, which has no
    sample dispersion: the result is 0 and a warning is logged, so the asset reports no GB-ratio.

    Args:
        prices (Sequence[float]): Strictly positive prices in time order.
        window (int): Number of most recent prices to use.
        use_variance (bool, optional): Return the variance instead. Defaults to False.

    Returns:
        float: The dispersion sigma.
    """
    recent: np.ndarray = np.asarray(prices, dtype=np.float64)[-window:] if window > 0 else np.asarray([])
    if recent.size < 2:
        raise TooFewPrices(f"At least 2 prices are required for a dispersion; got {recent.size}.")
    if not np.all(recent > 0):
        raise NonPositivePrice("Prices must be positive to form log returns.")
    returns: np.ndarray = log_returns(recent)
    if returns.size == 1:
        logger.warning("Only one price return in the window; its dispersion is reported as 0.")
        return 0.0
    _, std = sample_mean_std(returns)
    return std ** 2 if use_variance else std

def dominates(first: RiskPoint, second: RiskPoint) -> bool:
    """
    True if `first` has at least the margin and at most the dispersion of `second`, one strictly.
    """
    return (first.delta >= second.delta and first.sigma <= second.sigma
            and (first.delta > second.delta or first.sigma < second.sigma))

def efficient_set(points: Sequence[RiskPoint], include_negative: bool = False) -> list[RiskPoint]:
    """
    The non-dominated assets under (higher delta, lower sigma).

    Points are swept in order of increasing sigma. A point is dominated iff a point with strictly lower
    sigma has at least its delta, or a point with equal sigma has a strictly higher delta.

    Args:
        points (Sequence[RiskPoint]): Assets with sigma >= 0.
        include_negative (bool, optional): Keep negative-delta assets. Defaults to False.

    Returns:
        list[RiskPoint]: Efficient assets sorted by sigma ascending, then delta descending, then asset_id.
    """
    candidates: list[RiskPoint] = [point for point in points if include_negative or point.delta >= 0]
    ordered: list[RiskPoint] = sorted(candidates, key=lambda point: (point.sigma, -point.delta, point.asset_id))
    efficient: list[RiskPoint] = []
    best_lower_sigma: float = -np.inf
    index: int = 0
    while index < len(ordered):
        sigma: float = ordered[index].sigma
        group_end: int = index
        while group_end < len(ordered) and ordered[group_end].sigma == sigma:
            group_end += 1
        group: list[RiskPoint] = ordered[index:group_end]
        group_best: float = group[0].delta
        for point in group:
            if point.delta == group_best and point.delta > best_lower_sigma:
                efficient.append(point)
        best_lower_sigma = max(best_lower_sigma, group_best)
        index = group_end
    return efficient
