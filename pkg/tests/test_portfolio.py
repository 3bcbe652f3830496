import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from models.error_models import InsufficientOverlap
from models.fundamental_models import PricePoint
from models.kelly_models import KellyDecision, KellySignal
from models.portfolio_models import Allocation, CorrelationMatrix
from models.safety_models import SafetyReport
from utils.portfolio_utils import allocate, allocate_wagers, correlation_report, returns_frame, screen


def points(prices: list[float], start: int = 1) -> list[PricePoint]:
    return [PricePoint(period_index=start + index, price=price) for index, price in enumerate(prices)]

def report(asset_id: str, delta: float, gb: float | None) -> SafetyReport:
    return SafetyReport(asset_id=asset_id, N=0.1, M=0.1 / (1 - delta), delta=delta, classic_s=0.0,
                        price_dispersion=0.0 if gb is None else delta / gb, gb_ratio=gb, growth_constant=1.05,
                        valuation_price=100.0, market_price=90.0)


def test_wagers_above_the_cap_are_scaled_proportionally():
    allocation: Allocation = allocate_wagers(wagers={"A": 0.4, "B": 0.4}, ruin_cap=0.5)
    assert allocation.scaled
    assert allocation.gross_invested == pytest.approx(0.5, abs=1e-12)
    assert allocation.gross_invested <= 0.5
    assert allocation.weights["A"] == allocation.weights["B"]
    assert allocation.cash_weight + allocation.gross_invested == 1.0

def test_wagers_below_the_cap_are_kept():
    allocation: Allocation = allocate_wagers(wagers={"B": 0.1, "A": 0.2}, ruin_cap=0.8)
    assert not allocation.scaled
    assert allocation.weights == {"A": 0.2, "B": 0.1}
    assert list(allocation.weights) == ["A", "B"]
    assert allocation.cash_weight == pytest.approx(0.7)

def test_everything_at_fair_value_is_all_cash():
    decisions: dict[str, KellyDecision] = {
        asset_id: KellyDecision(p=0.0, q=1.0, edge=-100.0, raw_wager=-1.0, wager=0.0,
                                signal=KellySignal.MARKET_WEIGHT)
        for asset_id in ("A", "B")
    }
    allocation: Allocation = allocate(decisions=decisions, ruin_cap=0.5)
    assert allocation.cash_weight == 1.0
    assert allocation.gross_invested == 0.0
    assert allocation.weights == {"A": 0.0, "B": 0.0}

def test_allocation_needs_a_wager_and_a_valid_cap():
    with pytest.raises(ValueError):
        allocate_wagers(wagers={}, ruin_cap=0.5)
    with pytest.raises(ValueError):
        allocate_wagers(wagers={"A": 0.1}, ruin_cap=0.0)

@given(wagers=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=50),
       ruin_cap=st.floats(min_value=0.01, max_value=1.0))
@settings(max_examples=300)
def test_scaling_respects_the_cap_and_proportions(wagers, ruin_cap):
    raw: dict[str, float] = {f"A{index:02d}": wager for index, wager in enumerate(wagers)}
    allocation: Allocation = allocate_wagers(wagers=raw, ruin_cap=ruin_cap)
    assert allocation.gross_invested <= ruin_cap
    assert allocation.cash_weight + allocation.gross_invested == 1.0
    total: float = math.fsum(raw.values())
    if total > ruin_cap:
        assert allocation.gross_invested == pytest.approx(ruin_cap, rel=1e-12)
        for asset_id, wager in raw.items():
            assert allocation.weights[asset_id] == pytest.approx(wager * ruin_cap / total, rel=1e-12, abs=1e-300)
    else:
        assert allocation.weights == raw

def test_returns_frame_leaves_gaps_empty():
    frame = returns_frame(price_histories={"A": [PricePoint(period_index=1, price=100.0),
                                                 PricePoint(period_index=3, price=110.0),
                                                 PricePoint(period_index=4, price=121.0)]})
    assert list(frame.index) == [1, 2, 3, 4]
    assert frame["A"].isna().sum() == 3
    assert frame.loc[4, "A"] == pytest.approx(math.log(1.1))

def test_correlation_of_proportional_prices_is_one():
    matrix: CorrelationMatrix = correlation_report(price_histories={
        "B": points([10.0, 11.0, 10.5, 12.0]),
        "A": points([100.0, 110.0, 105.0, 120.0]),
    })
    assert matrix.asset_ids == ["A", "B"]
    assert matrix.values[0][0] == matrix.values[1][1] == 1.0
    assert matrix.values[0][1] == pytest.approx(1.0)
    assert matrix.values[0][1] == matrix.values[1][0]
    assert -1.0 <= matrix.values[0][1] <= 1.0

def test_correlation_uses_overlapping_periods_only():
    matrix: CorrelationMatrix = correlation_report(price_histories={
        "A": points([100.0, 110.0, 105.0, 120.0, 90.0, 130.0]),
        "B": points([50.0, 55.0, 45.0], start=4),
    })
    assert matrix.values[0][1] == pytest.approx(-1.0)

def test_correlation_needs_overlap():
    with pytest.raises(InsufficientOverlap):
        correlation_report(price_histories={"A": points([100.0, 110.0, 120.0]),
                                            "B": points([50.0, 55.0, 60.0], start=3)})

def test_correlation_of_constant_prices_is_left_undefined():
    matrix: CorrelationMatrix = correlation_report(price_histories={"A": points([100.0, 100.0, 100.0]),
                                                                   "B": points([50.0, 55.0, 53.0]),
                                                                   "C": points([20.0, 22.0, 21.0])})
    assert matrix.values[0][1] is None
    assert matrix.values[1][0] is None
    assert matrix.values[0][2] is None
    assert matrix.values[1][2] == pytest.approx(1.0, abs=0.05)
    assert matrix.values[0][0] == 1.0
    assert matrix.zero_dispersion == ["A"]

def test_independent_random_walks_are_nearly_uncorrelated():
    rng = np.random.default_rng(2024)
    first: np.ndarray = 100.0 * np.exp(np.cumsum(rng.normal(0.0, 0.01, 10_000)))
    second: np.ndarray = 100.0 * np.exp(np.cumsum(rng.normal(0.0, 0.01, 10_000)))
    matrix: CorrelationMatrix = correlation_report(price_histories={"A": points(first.tolist()),
                                                                   "B": points(second.tolist())})
    assert abs(matrix.values[0][1]) < 0.05
    assert matrix.zero_dispersion == []

def test_screen_orders_by_gb_ratio_then_delta_then_id():
    reports: dict[str, SafetyReport] = {
        "C": report("C", 0.2, 1.0),
        "A": report("A", 0.3, 2.0),
        "B": report("B", 0.1, 1.0),
        "D": report("D", 0.2, 1.0),
        "Z": report("Z", 0.5, None),
        "N": report("N", -0.1, -0.5),
    }
    assert screen(reports=reports) == ["A", "C", "D", "B"]
    assert screen(reports=reports, min_gb=1.5) == ["A"]
    assert screen(reports=reports, min_gb=-1.0) == ["A", "C", "D", "B", "N"]
