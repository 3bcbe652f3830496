import math
import numpy as np
from scipy.special import erf, ndtr
from models.error_models import NegativePrice, NonPositiveValuation, ZeroSigma
from models.kelly_models import CurvePoint, KellyDecision, KellySignal

DEFAULT_WAGER_CAP: float = 0.25
DEFAULT_EDGE_EPSILON_FRACTION: float = 1e-6


def std_normal_cdf(x: float) -> float:
    """
    Standard normal cumulative distribution function Phi(x).
    """
    return float(ndtr(x))

def normal_cdf(x: float, mean: float, std: float) -> float:
    """
    Location-scale normal CDF Phi_{mean,std}(x) = Phi((x - mean) / std).
    """
    if not std > 0:
        raise ZeroSigma(f"Standard deviation must be positive. Got: {std}")
    return std_normal_cdf((x - mean) / std)

def psi(x: float, mean: float, std: float) -> float:
    """
    Re-normalized CDF psi(x) = 1 - 2 Phi_{mean,std}(x).

    Evaluated as -erf(z / sqrt 2), which equals 1 - 2 Phi(z) without cancellation near the centre.
    psi is 0 at the mean, tends to 1 far below it and to -1 far above it.

    Raises:
        ZeroSigma: std is 0 (degenerate distribution).
    """
    if not std > 0:
        raise ZeroSigma(f"Standard deviation must be positive. Got: {std}")
    return float(-erf((x - mean) / (std * math.sqrt(2.0))))

def choose_signal(p: float, edge: float, wager: float, prior_wager: float, edge_epsilon: float) -> KellySignal:
    """
    Maps a decision to a position action.

    Order: no probability mass below the market price gives MarketWeight; a vanishing edge gives Exit;
    otherwise the wager is compared with the prior one.
    """
    if p == 0: return KellySignal.MARKET_WEIGHT
    if abs(edge) <= edge_epsilon: return KellySignal.EXIT
    if wager > prior_wager: return KellySignal.ADD
    if wager < prior_wager:
        return KellySignal.EXIT if wager == 0 else KellySignal.TRIM
    return KellySignal.HOLD

def kelly_decision(valuation_price: float, valuation_std: float, market_price: float,
                   wager_cap: float = DEFAULT_WAGER_CAP, prior_wager: float = 0.0, edge_epsilon: float | None = None,
                   allow_degenerate: bool = True) -> KellyDecision:
    """
    Kelly probability, edge and wager of an asset valued at P_t with dispersion sigma_0 and quoted at P_m.

    p = max(0, psi(P_m)), q = 1 - p, e = P_t p - P_m q, raw wager = e / P_t. The published wager is
    clamped to [0, wager_cap]: no shorting, no leverage.

    Args:
        valuation_price (float): Intrinsic price P_t, positive.
        valuation_std (float): Dispersion sigma_0 of the intrinsic price distribution.
        market_price (float): Market price P_m, non-negative.
        wager_cap (float, optional): Largest published wager. Defaults to 0.25.
        prior_wager (float, optional): Currently held wager, used to choose the signal. Defaults to 0.0.
        edge_epsilon (float | None, optional): Exit threshold on |e|. Defaults to 1e-6 * P_t.
        allow_degenerate (bool, optional): Treat sigma_0 = 0 as a step at P_t instead of raising. Defaults to True.

    Returns:
        KellyDecision: The decision.
    """
    if not valuation_price > 0:
        raise NonPositiveValuation(f"Valuation must be positive. Got: {valuation_price}")
    if market_price < 0:
        raise NegativePrice(f"Market price must be non-negative. Got: {market_price}")
    epsilon: float = DEFAULT_EDGE_EPSILON_FRACTION * valuation_price if edge_epsilon is None else edge_epsilon
    degenerate: bool = valuation_std == 0
    if degenerate:
        if not allow_degenerate:
            raise ZeroSigma("Valuation dispersion is zero.")
        p: float = 1.0 if market_price < valuation_price else 0.0
    else:
        p = max(0.0, psi(x=market_price, mean=valuation_price, std=valuation_std))
    q: float = 1.0 - p
    edge: float = valuation_price * p - market_price * q
    raw_wager: float = edge / valuation_price
    if degenerate:
        wager: float = wager_cap if market_price < valuation_price else 0.0
    else:
        wager = min(max(raw_wager, 0.0), wager_cap)
    signal: KellySignal = choose_signal(p=p, edge=edge, wager=wager, prior_wager=prior_wager, edge_epsilon=epsilon)
    return KellyDecision(p=p, q=q, edge=edge, raw_wager=raw_wager, wager=wager, signal=signal, degenerate=degenerate)

def kelly_curve(valuation_price: float, valuation_std: float, wager_cap: float = DEFAULT_WAGER_CAP,
                n_points: int = 101, max_multiple: float = 2.0) -> list[CurvePoint]:
    """
    Published wager as a function of the market price on [0, max_multiple * P_t].

    Returns:
        list[CurvePoint]: n_points evenly spaced (price, wager) pairs, price ascending.
    """
    prices: np.ndarray = np.linspace(0.0, max_multiple * valuation_price, n_points)
    return [CurvePoint(price=float(price),
                       wager=kelly_decision(valuation_price=valuation_price, valuation_std=valuation_std,
                                            market_price=float(price), wager_cap=wager_cap).wager)
            for price in prices]
