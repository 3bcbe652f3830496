import pytest
from fastapi.testclient import TestClient
from main import app

client: TestClient = TestClient(app)


def test_root():
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "Success"

def test_present_value_of_a_growing_path():
    flows: list[float] = [2.0 * 1.03 ** j for j in range(1, 11)]
    response = client.post("/valuation/present-value", json={"flows": flows, "N": 0.08})
    assert response.status_code == 200
    assert response.json()["present_value"] == pytest.approx(41.2, rel=1e-9)
    assert response.json()["price_multiple"] == pytest.approx(1.08 / 0.05, rel=1e-9)

def test_divergent_path_is_unprocessable():
    response = client.post("/valuation/present-value", json={"flows": [1.0, 2.0], "N": 0.1})
    assert response.status_code == 422
    assert "DivergentSeries" in response.json()["detail"]

def test_invalid_rate_is_rejected_by_validation():
    response = client.post("/valuation/present-value", json={"flows": [1.0], "N": 1.5})
    assert response.status_code == 422

def test_implied_rate_chain():
    response = client.post("/valuation/implied-rate",
                           json={"valuation_multiple": 20.0, "market_multiple": 10.0, "N": 0.1})
    assert response.status_code == 200
    body: dict = response.json()
    assert body["growth_constant"] == pytest.approx(1.045, abs=1e-12)
    assert body["M"] == pytest.approx(0.161111111111, abs=1e-9)
    assert body["delta"] == pytest.approx(0.37931, abs=1e-5)

def test_implied_rate_outside_the_unit_interval_is_unprocessable():
    response = client.post("/valuation/implied-rate",
                           json={"valuation_multiple": 20.0, "market_multiple": 2.0, "N": 0.1})
    assert response.status_code == 422

def test_safety_report():
    response = client.post("/safety/report", json={"N": 0.1, "valuation_price": 20.0, "market_price": 10.0,
                                                   "first_flow": 1.1, "prices": [100.0, 110.0, 100.0]})
    assert response.status_code == 200
    assert response.json()["classic_s"] == 0.5
    assert response.json()["delta"] == pytest.approx(0.37931, abs=1e-5)

def test_safety_report_with_too_few_prices_is_a_bad_request():
    response = client.post("/safety/report", json={"N": 0.1, "valuation_price": 20.0, "market_price": 10.0,
                                                   "first_flow": 1.1, "prices": [100.0]})
    assert response.status_code == 400

def test_kelly_decision():
    response = client.post("/kelly/decision", json={"valuation_price": 100.0, "valuation_std": 10.0,
                                                    "market_price": 90.0, "wager_cap": 1.0})
    assert response.status_code == 200
    assert response.json()["wager"] == pytest.approx(0.39711004, abs=1e-7)
    assert response.json()["signal"] == "Add"

def test_kelly_decision_rejects_negative_prices():
    response = client.post("/kelly/decision", json={"valuation_price": 100.0, "valuation_std": 10.0,
                                                    "market_price": -1.0})
    assert response.status_code == 422

def test_portfolio_allocation():
    response = client.post("/portfolio/allocate", json={"wagers": {"A": 0.4, "B": 0.4}, "ruin_cap": 0.5})
    assert response.status_code == 200
    body: dict = response.json()
    assert body["scaled"]
    assert body["gross_invested"] == pytest.approx(0.5, abs=1e-12)
    assert body["cash_weight"] + body["gross_invested"] == 1.0

def test_empty_allocation_is_a_bad_request():
    response = client.post("/portfolio/allocate", json={"wagers": {}})
    assert response.status_code == 400
