import logging
import math
import numpy as np
from scipy.optimize import bisect
from models.error_models import (DivergentSeries, NoRootInUnitInterval, NonConvergentRegime, NonFiniteSample,
                                 NonPositivePrice, NonPositiveValuation, PriceAtOrBelowUnity, SingularPoint)
from models.valuation_models import CashFlowPath, GrowthConstant, SensitivityDerivatives

logger = logging.getLogger(__name__)

BISECTION_LOWER: float = 1e-6
BISECTION_UPPER: float = 1 - 1e-6
ROOT_AGREEMENT: float = 1e-9


def nrrm(rate: float) -> float:
    """
    The multiple 1/N an investor is willing to pay per unit of normalized flow.
    """
    return 1.0 / rate

def discount_factors(rate: float, horizon: int) -> np.ndarray:
    """
    Constant-rate discount factors (1+N)^-j for j = 1..horizon.
    """
    return (1.0 + rate) ** -np.arange(1, horizon + 1, dtype=np.float64)

def geometric_tail(flows: np.ndarray, rate: float, tail_tolerance: float = 1e-12) -> float:
    """
    Closed-form value of the flows beyond the horizon, continuing the last-step growth ratio.

    The ratio test on the continuation must pass with a margin: |F_T / F_{T-1}| / (1+N) < 1 - tail_tolerance.
    A one-period path is continued flat.

    Args:
        flows (np.ndarray): Explicit flows F(1..T).
        rate (float): Discount rate N.
        tail_tolerance (float, optional): Smallest accepted gap between the discounted tail ratio and 1. Defaults to 1e-12.

    Returns:
        float: Present value at t = 0 of F(T+1), F(T+2), ...
    """
    horizon: int = len(flows)
    last: float = float(flows[-1])
    if last == 0: return 0.0
    if horizon < 2:
        ratio: float = 1.0
    else:
        previous: float = float(flows[-2])
        if previous == 0:
            raise DivergentSeries("Cannot estimate the tail growth ratio after a zero flow.")
        ratio = last / previous
    step: float = ratio / (1.0 + rate)
    if abs(step) >= 1 - tail_tolerance:
        raise DivergentSeries(f"Valuation series diverges: tail ratio {ratio} is not below 1 + N = {1 + rate} "
                              f"by the tail tolerance {tail_tolerance}.")
    return last * (1.0 + rate) ** -horizon * step / (1.0 - step)

def present_value(path: CashFlowPath, rate: float, include_tail: bool = True, tail_tolerance: float = 1e-12) -> float:
    """
    Intrinsic present value V = sum_j F(j) / (1+N)^j of a projected cash flow path.

    The explicit horizon is summed exactly and, for indefinite-life assets, followed by the geometric tail.

    Args:
        path (CashFlowPath): Projected flows F(1..T).
        rate (float): Discount rate N in (0, 1).
        include_tail (bool, optional): Add the geometric tail beyond T. Defaults to True (False for Discrete assets).
        tail_tolerance (float, optional): See geometric_tail. Defaults to 1e-12.

    Returns:
        float: The present value at t = 0.
    """
    flows: np.ndarray = np.asarray(path.flows, dtype=np.float64)
    if flows.size == 0: return 0.0
    if not np.all(np.isfinite(flows)):
        raise NonFiniteSample("Cash flow path contains non-finite values.")
    explicit: float = math.fsum(flows * discount_factors(rate=rate, horizon=flows.size))
    if not include_tail: return explicit
    return explicit + geometric_tail(flows=flows, rate=rate, tail_tolerance=tail_tolerance)

def holding_period_return(price: float, next_price: float, next_dividend: float) -> float:
    """
    Gross one-period return R_{t+1} = (p_{t+1} + d_{t+1}) / p_t of the payoff x_{t+1} = p_{t+1} + d_{t+1}.
    """
    if not price > 0:
        raise NonPositivePrice(f"Purchase price must be positive. Got: {price}")
    return (next_price + next_dividend) / price

def closed_form_price(c: float, rate: float) -> float:
    """
    Price multiple of a geometric valuation series: P = sum_{j>=0} (c/(1+r))^j = (1+r)/(1+r-c).
    """
    denominator: float = 1.0 + rate - c
    if not denominator > 0:
        raise DivergentSeries(f"Growth constant {c} is not below 1 + rate = {1 + rate}.")
    return (1.0 + rate) / denominator

def growth_constant(price: float, rate: float) -> GrowthConstant:
    """
    Growth constant c = (P - 1)(1 + r) / P of a price multiple valued at rate r.

    Args:
        price (float): Price as a multiple of one unit of flow.
        rate (float): The rate N (or M) the price was valued at.

    Returns:
        GrowthConstant: c, satisfying P = (1+r)/(1+r-c).
    """
    if not price > 1:
        raise PriceAtOrBelowUnity(f"Price multiple must exceed 1. Got: {price}")
    c: float = (price - 1.0) * (1.0 + rate) / price
    if not 1 < c < 1 + rate:
        raise NonConvergentRegime(f"Growth constant {c} lies outside (1, {1 + rate}) for price multiple {price} "
                                  f"at rate {rate}.")
    if c >= 2:
        logger.warning("Growth constant %r lies outside (1, 2).", c)
    return GrowthConstant(c=c, rate=rate, price=price)

def implied_rate(market_price: float, c: GrowthConstant | float) -> float:
    """
    Discount rate M at which a growth constant reproduces the market price multiple.

    Solves P_m = (1+M)/(1+M-c) in closed form, M = P/(P-1) c - 1, and checks the root by bisection on
    the series residual over [1e-6, 1 - 1e-6]. The bisection root wins when the two disagree.

    Args:
        market_price (float): Market price as a multiple of one unit of flow.
        c (GrowthConstant | float): The growth constant of the intrinsic valuation.

    Returns:
        float: The market-implied rate M in (0, 1).
    """
    c_value: float = c.c if isinstance(c, GrowthConstant) else float(c)
    if not market_price > 1:
        raise PriceAtOrBelowUnity(f"Market price multiple must exceed 1. Got: {market_price}")
    # Identical series imply identical rates.
    if isinstance(c, GrowthConstant) and c.price == market_price:
        return c.rate
    closed_form: float = market_price / (market_price - 1.0) * c_value - 1.0
    if not 0 < closed_form < 1:
        raise NoRootInUnitInterval(f"Implied rate {closed_form} lies outside (0, 1) for price multiple "
                                   f"{market_price} and growth constant {c_value}.")

    def residual(rate: float) -> float:
        return (1.0 + rate) / (1.0 + rate - c_value) - market_price

    lower: float = max(BISECTION_LOWER, c_value - 1.0 + 1e-12)
    upper: float = BISECTION_UPPER if residual(BISECTION_UPPER) < 0 else 1.0
    if lower >= upper or residual(lower) < 0:
        return closed_form
    root: float = bisect(residual, lower, upper, xtol=1e-15, maxiter=200)
    if abs(root - closed_form) > ROOT_AGREEMENT:
        logger.warning("Closed-form rate %r disagrees with bisection root %r; using the bisection root.",
                       closed_form, root)
        return root
    return closed_form

def sensitivity_derivatives(price: float, rate: float, c: float) -> SensitivityDerivatives:
    """
    The six partial derivatives linking price multiple P, rate M and growth constant c.

    Relations: P = (1+M)/(1+M-c), c = (P-1)(1+M)/P, M = P c/(P-1) - 1.

    Raises:
        SingularPoint: 1 + M = c or P = 1.
    """
    gap: float = 1.0 + rate - c
    if gap == 0 or price == 1:
        raise SingularPoint(f"Derivatives are undefined at P={price}, M={rate}, c={c}.")
    return SensitivityDerivatives(
        dP_dc=(1.0 + rate) / gap ** 2,
        dP_dM=-c / gap ** 2,
        dc_dP=(1.0 + rate) / price ** 2,
        dc_dM=(price - 1.0) / price,
        dM_dc=price / (price - 1.0),
        dM_dP=-c / (price - 1.0) ** 2
    )

def price_multiple(value: float, first_flow: float, rate: float) -> float:
    """
    Expresses a currency valuation per unit of discounted first-period flow, value (1+N) / F(1).

    For geometric flows with ratio r this is exactly (1+N)/(1+N-r), the closed form series.
    """
    if not first_flow > 0:
        raise NonPositiveValuation(f"First-period flow must be positive to form a price multiple. Got: {first_flow}")
    return value * (1.0 + rate) / first_flow

def discrete_value(coupon: float, face_value: float, maturity: int, rate: float) -> float:
    """
    Value of a Discrete asset: finite coupon path with the face amount at maturity and no tail.
    """
    flows: list[float] = [coupon] * maturity
    flows[-1] += face_value
    return present_value(path=CashFlowPath(flows=flows), rate=rate, include_tail=False)

def cash_value(face_value: float) -> float:
    """
    Cash is a store of time: its value is the face amount.
    """
    return face_value
