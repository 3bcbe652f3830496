from pydantic import BaseModel, field_validator
from models.config_models import must_be_a_fraction
from models.valuation_models import must_be_a_unit_rate


class PresentValueRequest(BaseModel):
    """
    Data required to value a projected cash flow path.

    Args:
        flows (list[float]): Projected flows F(1..T).
        N (float): Discount rate in (0, 1).
        include_tail (bool, optional): Continue the path beyond T with a geometric tail. Defaults to True.
    """
    flows: list[float]
    N: float
    include_tail: bool = True

    _N_validator = field_validator('N')(must_be_a_unit_rate)

class ImpliedRateRequest(BaseModel):
    """
    Data required to imply the market rate M from a valuation and a market price multiple.

    Args:
        valuation_multiple (float): Intrinsic price multiple P, above 1.
        market_multiple (float): Market price multiple P_m, above 1.
        N (float): The investor's rate the valuation was made at.
    """
    valuation_multiple: float
    market_multiple: float
    N: float

    _N_validator = field_validator('N')(must_be_a_unit_rate)

class SafetyRequest(BaseModel):
    """
    Data required to build a margin of safety report.

    Args:
        N (float): The investor's rate.
        valuation_price (float): Intrinsic price P_t.
        market_price (float): Market price P_m.
        first_flow (float): Expected first-period flow.
        prices (list[float]): Price history, oldest first.
        dispersion_window (int, optional): Trailing window for the dispersion. Defaults to 252.
    """
    N: float
    valuation_price: float
    market_price: float
    first_flow: float
    prices: list[float]
    dispersion_window: int = 252

    _N_validator = field_validator('N')(must_be_a_unit_rate)

class KellyRequest(BaseModel):
    """
    Data required for a Kelly decision.

    Args:
        valuation_price (float): Intrinsic price P_t.
        valuation_std (float): Dispersion sigma_0 of the intrinsic price.
        market_price (float): Market price P_m.
        wager_cap (float, optional): Largest wager. Defaults to 0.25.
        prior_wager (float, optional): Currently held wager. Defaults to 0.0.
    """
    valuation_price: float
    valuation_std: float
    market_price: float
    wager_cap: float = 0.25
    prior_wager: float = 0.0

    _wager_cap_validator = field_validator('wager_cap')(must_be_a_fraction)

class AllocationRequest(BaseModel):
    """
    Data required to aggregate wagers under a ruin cap.

    Args:
        wagers (dict[str, float]): Published wager per asset.
        ruin_cap (float, optional): Largest investable fraction. Defaults to 0.8.
    """
    wagers: dict[str, float]
    ruin_cap: float = 0.8

    _ruin_cap_validator = field_validator('ruin_cap')(must_be_a_fraction)
