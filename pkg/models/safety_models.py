from typing import NamedTuple
from pydantic import BaseModel, ConfigDict


class SafetyReport(BaseModel):
    """
    Margin of safety measures of one asset.

    Args:
        asset_id (str): The asset the report belongs to.
        N (float): The investor's normalized rate of return.
        M (float): The rate implied by the market price.
        delta (float): Margin of safety 1 - N/M.
        classic_s (float): Classic margin of safety 1 - P_market/P_valuation.
        price_dispersion (float): Historical dispersion of log price relatives.
        gb_ratio (float | None): delta / price_dispersion. None when the dispersion is zero.
        growth_constant (float): Growth constant c used to imply M.
        valuation_price (float): The intrinsic price P_t.
        market_price (float): The observed market price.
    """
    model_config = ConfigDict(frozen=True)

    asset_id: str
    N: float
    M: float
    delta: float
    classic_s: float
    price_dispersion: float
    gb_ratio: float | None
    growth_constant: float
    valuation_price: float
    market_price: float

class RiskPoint(NamedTuple):
    """
    An asset placed in the (delta, sigma) plane.
    """
    asset_id: str
    delta: float
    sigma: float
