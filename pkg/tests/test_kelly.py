import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from models.error_models import NegativePrice, NonPositiveValuation, ZeroSigma
from models.kelly_models import CurvePoint, KellyDecision, KellySignal
from utils.kelly_utils import kelly_curve, kelly_decision, normal_cdf, psi, std_normal_cdf


def test_psi_is_one_minus_twice_the_cdf():
    for x in (-3.0, -1.0, 0.0, 0.5, 2.0):
        assert psi(x=x, mean=0.0, std=1.0) == pytest.approx(1.0 - 2.0 * std_normal_cdf(x), abs=1e-15)
    assert psi(x=100.0, mean=100.0, std=10.0) == 0.0

def test_normal_cdf_is_location_scale():
    assert normal_cdf(x=90.0, mean=100.0, std=10.0) == pytest.approx(std_normal_cdf(-1.0), rel=1e-15)
    with pytest.raises(ZeroSigma):
        normal_cdf(x=1.0, mean=0.0, std=0.0)

def test_worked_decision():
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=90.0,
                                             wager_cap=1.0)
    assert decision.p == pytest.approx(0.682689, abs=1e-6)
    assert decision.q == pytest.approx(1.0 - decision.p, abs=1e-15)
    assert decision.edge == pytest.approx(100.0 * decision.p - 90.0 * decision.q, rel=1e-12)
    assert decision.wager == pytest.approx(0.39711004, abs=1e-7)
    assert decision.raw_wager == decision.wager
    assert decision.signal == KellySignal.ADD
    assert not decision.degenerate

def test_default_cap_clamps_the_wager():
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=90.0)
    assert decision.wager == 0.25
    assert decision.raw_wager == pytest.approx(0.39711004, abs=1e-7)

def test_fair_market_price_gets_no_wager():
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=100.0)
    assert decision.p == 0.0
    assert decision.wager == 0.0
    assert decision.signal == KellySignal.MARKET_WEIGHT

def test_overpriced_assets_get_no_wager():
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=130.0)
    assert decision.wager == 0.0
    assert decision.raw_wager < 0

def test_free_asset_gets_the_full_cap():
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=0.0)
    assert decision.wager == 0.25

def test_wager_is_monotone_in_the_market_price():
    wagers: list[float] = [kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=float(price),
                                          wager_cap=1.0).wager
                           for price in np.linspace(0.0, 200.0, 1000)]
    assert all(later <= earlier for earlier, later in zip(wagers, wagers[1:]))

@pytest.mark.parametrize("k", [0.5, 2.0, 10.0])
def test_wager_is_scale_invariant(k):
    base: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=90.0,
                                         wager_cap=1.0)
    scaled: KellyDecision = kelly_decision(valuation_price=100.0 * k, valuation_std=10.0 * k,
                                           market_price=90.0 * k, wager_cap=1.0)
    assert scaled.wager == pytest.approx(base.wager, rel=1e-12)

@given(market_price=st.floats(min_value=0.0, max_value=500.0), cap=st.floats(min_value=0.01, max_value=1.0))
@settings(max_examples=200)
def test_wager_stays_within_the_cap(market_price, cap):
    decision: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=20.0, market_price=market_price,
                                             wager_cap=cap)
    assert 0.0 <= decision.wager <= cap
    assert decision.p + decision.q == pytest.approx(1.0)

def test_degenerate_dispersion_is_a_step():
    below: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=0.0, market_price=99.0)
    above: KellyDecision = kelly_decision(valuation_price=100.0, valuation_std=0.0, market_price=100.0)
    assert below.degenerate and above.degenerate
    assert below.wager == 0.25
    assert above.wager == 0.0
    with pytest.raises(ZeroSigma):
        kelly_decision(valuation_price=100.0, valuation_std=0.0, market_price=99.0, allow_degenerate=False)

def test_invalid_prices_are_rejected():
    with pytest.raises(NonPositiveValuation):
        kelly_decision(valuation_price=0.0, valuation_std=10.0, market_price=90.0)
    with pytest.raises(NegativePrice):
        kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=-1.0)

def test_signals_follow_the_prior_wager():
    def signal(prior_wager: float, market_price: float = 90.0, edge_epsilon: float | None = None) -> KellySignal:
        return kelly_decision(valuation_price=100.0, valuation_std=10.0, market_price=market_price,
                              prior_wager=prior_wager, edge_epsilon=edge_epsilon).signal
    assert signal(prior_wager=0.0) == KellySignal.ADD
    assert signal(prior_wager=0.25) == KellySignal.HOLD
    assert signal(prior_wager=0.25, market_price=93.0) == KellySignal.TRIM
    assert signal(prior_wager=0.25, market_price=99.99) == KellySignal.EXIT
    assert signal(prior_wager=0.25, edge_epsilon=1e6) == KellySignal.EXIT

def test_curve_spans_twice_the_valuation_and_is_monotone():
    curve: list[CurvePoint] = kelly_curve(valuation_price=100.0, valuation_std=10.0, wager_cap=0.25)
    assert len(curve) == 101
    assert curve[0].price == 0.0
    assert curve[-1].price == pytest.approx(200.0)
    assert curve[0].wager == 0.25
    assert curve[-1].wager == 0.0
    assert all(later.wager <= earlier.wager for earlier, later in zip(curve, curve[1:]))
