from enum import Enum
from pydantic import BaseModel, ConfigDict


class KellySignal(str, Enum):
    """
    Enum class for the position actions a Kelly decision can emit.
    """
    ADD = "Add"
    HOLD = "Hold"
    TRIM = "Trim"
    EXIT = "Exit"
    MARKET_WEIGHT = "MarketWeight"

class KellyDecision(BaseModel):
    """
    Kelly sizing of one asset at one market price.

    Args:
        p (float): Probability of the favourable outcome, psi of the market price clamped at 0.
        q (float): 1 - p.
        edge (float): Edge e = P_t p - P_m q, in currency.
        raw_wager (float): Unclamped wager e / P_t.
        wager (float): Published wager, clamped to [0, wager_cap].
        signal (KellySignal): Action relative to the prior wager.
        degenerate (bool): True when sigma_0 = 0 and the decision is a step at P_t.
    """
    model_config = ConfigDict(frozen=True)

    p: float
    q: float
    edge: float
    raw_wager: float
    wager: float
    signal: KellySignal
    degenerate: bool = False

class CurvePoint(BaseModel):
    """
    One (market price, wager) pair of a Kelly weighting curve.
    """
    model_config = ConfigDict(frozen=True)

    price: float
    wager: float
