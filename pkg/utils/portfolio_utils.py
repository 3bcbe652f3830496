import logging
import math
from collections.abc import Mapping, Sequence
import numpy as np
import pandas as pd
from models.error_models import InsufficientOverlap
from models.fundamental_models import PricePoint
from models.kelly_models import KellyDecision
from models.portfolio_models import Allocation, CorrelationMatrix
from models.safety_models import SafetyReport

logger = logging.getLogger(__name__)

DEFAULT_RUIN_CAP: float = 0.8


def scale_to_cap(raw_weights: Mapping[str, float], ruin_cap: float) -> tuple[dict[str, float], bool]:
    """
    Scales weights proportionally so their sum does not exceed the cap.

    The common factor is nudged down one ulp at a time until the rounded sum is within the cap.

    Returns:
        tuple[dict[str, float], bool]: (weights, whether scaling was applied).
    """
    total: float = math.fsum(raw_weights.values())
    if total <= ruin_cap:
        return dict(raw_weights), False
    factor: float = ruin_cap / total
    scaled: dict[str, float] = {asset_id: weight * factor for asset_id, weight in raw_weights.items()}
    while math.fsum(scaled.values()) > ruin_cap:
        factor = float(np.nextafter(factor, 0.0))
        scaled = {asset_id: weight * factor for asset_id, weight in raw_weights.items()}
    return scaled, True

def allocate_wagers(wagers: Mapping[str, float], ruin_cap: float = DEFAULT_RUIN_CAP,
                    correlation: CorrelationMatrix | None = None) -> Allocation:
    """
    Aggregates per-asset wagers into portfolio weights under the ruin cap.

    Wagers are taken as raw weights. If their sum exceeds ruin_cap every weight is scaled by the same
    factor; zero wagers stay zero. The residual is held as cash.

    Args:
        wagers (Mapping[str, float]): Published wager per asset, non-empty.
        ruin_cap (float, optional): Largest investable fraction, in (0, 1]. Defaults to 0.8.
        correlation (CorrelationMatrix | None, optional): Correlation report to attach. Defaults to None.

    Returns:
        Allocation: Weights, cash and gross investment.
    """
    if not wagers:
        raise ValueError("At least one wager is required.")
    if not 0 < ruin_cap <= 1:
        raise ValueError(f"Ruin cap must lie in (0, 1]. Got: {ruin_cap}")
    raw_weights: dict[str, float] = {asset_id: max(wager, 0.0) for asset_id, wager in sorted(wagers.items())}
    weights, scaled = scale_to_cap(raw_weights=raw_weights, ruin_cap=ruin_cap)
    gross_invested: float = math.fsum(weights.values())
    return Allocation(weights=weights, cash_weight=1.0 - gross_invested, gross_invested=gross_invested,
                      ruin_cap=ruin_cap, scaled=scaled, correlation=correlation or CorrelationMatrix())

def allocate(decisions: Mapping[str, KellyDecision], ruin_cap: float = DEFAULT_RUIN_CAP,
             correlation: CorrelationMatrix | None = None) -> Allocation:
    """
    Allocation of the published wagers of a set of Kelly decisions. See allocate_wagers.
    """
    if not decisions:
        raise ValueError("At least one decision is required.")
    return allocate_wagers(wagers={asset_id: decision.wager for asset_id, decision in decisions.items()},
                           ruin_cap=ruin_cap, correlation=correlation)

def returns_frame(price_histories: Mapping[str, Sequence[PricePoint]]) -> pd.DataFrame:
    """
    One-period log returns per asset, indexed by period. A return exists only for consecutive periods.
    """
    columns: dict[str, pd.Series] = {}
    for asset_id, points in price_histories.items():
        prices: pd.Series = pd.Series({point.period_index: point.price for point in points}, dtype="float64")
        prices = prices.sort_index()
        full_index: pd.Index = pd.RangeIndex(int(prices.index.min()), int(prices.index.max()) + 1) \
            if len(prices) else pd.RangeIndex(0)
        columns[asset_id] = np.log(prices.reindex(full_index)).diff()
    return pd.DataFrame(columns)

def correlation_report(price_histories: Mapping[str, Sequence[PricePoint]]) -> CorrelationMatrix:
    """
    Pairwise sample correlation of one-period log returns over each pair's overlapping periods.

    A pair whose overlap holds constant returns for either asset has no correlation: its entry is None
    and the constant asset is listed in zero_dispersion.

    Raises:
        InsufficientOverlap: A pair shares fewer than 2 return observations.
    """
    asset_ids: list[str] = sorted(price_histories)
    frame: pd.DataFrame = returns_frame(price_histories={asset_id: price_histories[asset_id]
                                                         for asset_id in asset_ids})
    values: list[list[float | None]] = [[1.0] * len(asset_ids) for _ in asset_ids]
    zero_dispersion: set[str] = set()
    for row, first in enumerate(asset_ids):
        for column in range(row + 1, len(asset_ids)):
            second: str = asset_ids[column]
            pair: pd.DataFrame = frame[[first, second]].dropna()
            if len(pair) < 2:
                raise InsufficientOverlap(f"Assets '{first}' and '{second}' share {len(pair)} return "
                                          f"observations; at least 2 are required.")
            flat: list[str] = [asset_id for asset_id in (first, second) if pair[asset_id].nunique() < 2]
            rho: float | None = None if flat else float(pair[first].corr(pair[second]))
            if rho is None or math.isnan(rho):
                zero_dispersion.update(flat or [first, second])
                logger.warning("Correlation of %s and %s is undefined: constant returns.", first, second)
                rho = None
            else:
                rho = min(1.0, max(-1.0, rho))
            values[row][column] = rho
            values[column][row] = rho
    return CorrelationMatrix(asset_ids=asset_ids, values=values, zero_dispersion=sorted(zero_dispersion))

def screen(reports: Mapping[str, SafetyReport], min_gb: float = 0.0) -> list[str]:
    """
    Assets whose GB-ratio reaches min_gb, best first.

    Ordered by GB-ratio descending, ties broken by higher delta, then asset_id. Assets without a
    GB-ratio (zero dispersion) are left out.
    """
    eligible: list[tuple[str, SafetyReport]] = [(asset_id, report) for asset_id, report in reports.items()
                                                if report.gb_ratio is not None and report.gb_ratio >= min_gb]
    eligible.sort(key=lambda item: (-item[1].gb_ratio, -item[1].delta, item[0]))
    return [asset_id for asset_id, _ in eligible]
