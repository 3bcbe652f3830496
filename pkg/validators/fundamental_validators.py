import math
from models.error_models import (InconsistentFactors, InvalidAssetKind, MissingFactorValue, NonPositiveRevenue,
                                 TooFewPeriods, UnsortedPeriods, NonPositivePrice)
from models.fundamental_models import AssetKind, FundamentalSeries, PricePoint

MIN_PERIODS: int = 3


def validate_periods_sorted(series: FundamentalSeries) -> None:
    """
    Check that fundamentals and prices are strictly increasing in period_index.

    Raises:
        UnsortedPeriods: A period index repeats or goes backwards.
    """
    for label, indices in (("fundamentals", [p.period_index for p in series.periods]),
                           ("prices", [p.period_index for p in series.prices])):
        for previous, current in zip(indices, indices[1:]):
            if current <= previous:
                raise UnsortedPeriods(f"{label} periods must be strictly increasing; "
                                      f"period {current} follows {previous}.", asset_id=series.asset_id)

def validate_factor_sets(series: FundamentalSeries) -> None:
    """
    Check that every period carries the same factor names and that no value is missing.

    Raises:
        InconsistentFactors: A period has a different factor-name set.
        MissingFactorValue: A factor value is NaN.
    """
    if not series.periods: return
    expected: set[str] = set(series.periods[0].factors.keys())
    for period in series.periods:
        if set(period.factors.keys()) != expected:
            raise InconsistentFactors(f"Period {period.period_index} carries factors {sorted(period.factors)}, "
                                      f"expected {sorted(expected)}.", asset_id=series.asset_id)
        for name, value in period.factors.items():
            if value is None or math.isnan(value):
                raise MissingFactorValue(f"Factor '{name}' is missing in period {period.period_index}.",
                                         asset_id=series.asset_id)

def validate_revenue_positive(series: FundamentalSeries) -> None:
    """
    Raises:
        NonPositiveRevenue: Some R(t) <= 0 (normalization divides by revenue).
    """
    for period in series.periods:
        if not period.revenue > 0:
            raise NonPositiveRevenue(f"Revenue must be positive; period {period.period_index} has "
                                     f"{period.revenue}.", asset_id=series.asset_id)

def validate_prices_positive(prices: list[PricePoint], asset_id: str | None = None) -> None:
    """
    Raises:
        NonPositivePrice: Some market price <= 0.
    """
    for point in prices:
        if not point.price > 0:
            raise NonPositivePrice(f"Market prices must be positive; period {point.period_index} has "
                                   f"{point.price}.", asset_id=asset_id)

def validate_series_for_normalization(series: FundamentalSeries) -> None:
    """
    Validate every FundamentalSeries invariant needed before normalization.

    Checks:
    - The asset is Dynamic.
    - There are at least three periods.
    - Periods are strictly increasing.
    - Every period has the same, complete factor set.
    - Revenue is strictly positive.

    Args:
        series (FundamentalSeries): The panel to check.
    """
    if series.kind != AssetKind.DYNAMIC:
        raise InvalidAssetKind(f"Only Dynamic assets can be normalized; got {series.kind.value}.",
                               asset_id=series.asset_id)
    if len(series.periods) < MIN_PERIODS:
        raise TooFewPeriods(f"At least {MIN_PERIODS} periods are required; got {len(series.periods)}.",
                            asset_id=series.asset_id)
    validate_periods_sorted(series=series)
    validate_factor_sets(series=series)
    validate_revenue_positive(series=series)
