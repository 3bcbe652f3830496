import csv
import json
from pathlib import Path
import pytest
from cli import main
from config.config import load_run_config
from models.fundamental_models import FundamentalSeries
from models.valuation_models import CashFlowPath
from storage.storage_manager import StorageManager
from utils.fundamental_utils import normalize
from utils.montecarlo_utils import mean_flow_path
from utils.valuation_utils import present_value


def run(config_path: Path, out: Path, command: str, *flags: str) -> int:
    return main(["--config", str(config_path), "--out", str(out), *flags, command])

def read_json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))

def read_csv_rows(path: Path) -> list[dict[str, str]]:
    lines: list[str] = [line for line in path.read_text(encoding="utf-8").splitlines() if not line.startswith("#")]
    return list(csv.DictReader(lines))


def test_allocate_is_byte_identical_across_runs(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path / "first", "allocate", "--seed", "42") == 0
    assert run(demo_config_path, tmp_path / "second", "allocate", "--seed", "42") == 0
    first_files: list[str] = sorted(path.name for path in (tmp_path / "first").iterdir())
    assert first_files == sorted(path.name for path in (tmp_path / "second").iterdir())
    assert first_files == ["allocation.json", "curve_ACME.csv", "curve_BOLT.csv"]
    for name in first_files:
        assert (tmp_path / "first" / name).read_bytes() == (tmp_path / "second" / name).read_bytes()

def test_allocate_scales_to_the_ruin_cap(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "allocate") == 0
    report: dict = read_json(tmp_path / "allocation.json")
    assert report["meta"]["seed"] == 42
    assert len(report["meta"]["config_hash"]) == 64
    assert set(report["weights"]) == {"ACME", "BOLT"}
    assert report["scaled"]
    assert sum(report["weights"].values()) == pytest.approx(0.5, abs=1e-12)
    assert report["cash_weight"] + report["gross_invested"] == 1.0
    assert report["correlation_assets"] == ["ACME", "BOLT"]
    assert report["decisions"]["ACME"]["signal"] == "Add"

def test_allocate_curves_are_monotone(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "allocate") == 0
    for asset_id in ("ACME", "BOLT"):
        rows: list[dict[str, str]] = read_csv_rows(tmp_path / f"curve_{asset_id}.csv")
        prices: list[float] = [float(row["price"]) for row in rows]
        wagers: list[float] = [float(row["wager"]) for row in rows]
        assert len(rows) == 101
        assert prices == sorted(prices)
        assert all(later <= earlier for earlier, later in zip(wagers, wagers[1:]))

def test_allocate_tolerates_an_asset_with_flat_prices(write_config, tmp_path):
    config_path: Path = write_config({
        "assets": [{"asset_id": "ACME", "fundamentals": "acme_fundamentals.csv", "prices": "acme_prices.csv"},
                   {"asset_id": "FLAT", "fundamentals": "acme_fundamentals.csv", "prices": "flat_prices.csv"}],
        "nrr": {"N": 0.1},
        "simulation": {"n_samples": 200},
    })
    rows: str = "".join(f"{period},100.0\n" for period in range(1, 13))
    (tmp_path / "flat_prices.csv").write_text(f"period,price\n{rows}", encoding="utf-8")
    assert run(config_path, tmp_path / "out", "allocate") == 0
    report: dict = read_json(tmp_path / "out" / "allocation.json")
    assert set(report["weights"]) == {"ACME", "FLAT"}
    assert report["correlations"][0][1] is None
    assert report["correlations"][1][1] == 1.0
    assert report["zero_dispersion"] == ["FLAT"]
    assert report["cash_weight"] + report["gross_invested"] == 1.0

def test_value_reports_every_asset(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "value") == 0
    report: dict = read_json(tmp_path / "value.json")
    assets: dict[str, dict] = {asset["asset_id"]: asset for asset in report["assets"]}
    assert list(assets) == ["ACME", "BOLT", "BOND5", "CASH"]
    assert assets["CASH"]["mean_price"] == 1.0
    assert assets["BOND5"]["std_price"] == 0.0
    assert assets["ACME"]["n_samples"] == 2000
    assert assets["ACME"]["drift"]["window"] == 3
    assert 1.0 < assets["ACME"]["growth_constant"] < 1.1

def test_value_is_close_to_the_deterministic_valuation(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "value") == 0
    report: dict = read_json(tmp_path / "value.json")
    run_config = load_run_config(path=demo_config_path)
    series: FundamentalSeries = StorageManager().load_series(asset=run_config.assets[0])
    factors = normalize(series=series)
    deterministic: float = present_value(
        path=CashFlowPath(flows=mean_flow_path(factors=factors, start_revenue=factors.last_revenue, horizon=10)),
        rate=0.1)
    assert report["assets"][0]["mean_price"] == pytest.approx(deterministic, rel=0.02)

def test_value_writes_csv_and_sample_dumps(write_config, tmp_path):
    config_path: Path = write_config({
        "assets": [{"asset_id": "ACME", "fundamentals": "acme_fundamentals.csv", "prices": "acme_prices.csv"}],
        "nrr": {"N": 0.1},
        "simulation": {"n_samples": 200, "dump_samples": True},
    })
    assert run(config_path, tmp_path / "out", "value", "--format", "csv", "--seed", "9") == 0
    text: str = (tmp_path / "out" / "value.csv").read_text(encoding="utf-8")
    assert text.startswith("# seed=9\n# config_hash=")
    rows: list[dict[str, str]] = read_csv_rows(tmp_path / "out" / "value.csv")
    assert rows[0]["asset_id"] == "ACME"
    assert len(read_csv_rows(tmp_path / "out" / "samples_ACME.csv")) == 200

def test_safety_at_fair_market_price_has_no_margin(write_config, demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path / "value", "value") == 0
    mean_price: float = read_json(tmp_path / "value" / "value.json")["assets"][0]["mean_price"]
    config_path: Path = write_config({
        "assets": [{"asset_id": "ACME", "fundamentals": "acme_fundamentals.csv", "prices": "acme_prices.csv"}],
        "nrr": {"N": 0.1, "horizon": 10},
        "simulation": {"n_samples": 2000, "seed": 42, "distribution": "normal", "horizon": 10},
        "market_prices": {"ACME": mean_price},
    })
    assert run(config_path, tmp_path / "safety", "safety") == 0
    report: dict = read_json(tmp_path / "safety" / "safety.json")["reports"][0]
    assert report["delta"] == 0.0
    assert report["classic_s"] == 0.0
    assert report["M"] == 0.1

def test_safety_reports_dynamic_assets_only(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "safety") == 0
    reports: list[dict] = read_json(tmp_path / "safety.json")["reports"]
    assert [report["asset_id"] for report in reports] == ["ACME", "BOLT"]
    for report in reports:
        assert report["M"] > report["N"]
        assert report["delta"] == pytest.approx(1.0 - report["N"] / report["M"], rel=1e-12)
        assert report["classic_s"] == pytest.approx(1.0 - report["market_price"] / report["valuation_price"])
        assert report["gb_ratio"] == pytest.approx(report["delta"] / report["price_dispersion"])

def test_screen_lists_the_efficient_set(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "screen") == 0
    report: dict = read_json(tmp_path / "screen.json")
    assert sorted(report["screened"][index]["asset_id"] for index in range(2)) == ["ACME", "BOLT"]
    assert report["zero_dispersion"] == []
    assert 1 <= len(report["efficient_set"]) <= 2

def test_screen_writes_csv(demo_config_path, tmp_path):
    assert run(demo_config_path, tmp_path, "screen", "--format", "csv") == 0
    rows: list[dict[str, str]] = read_csv_rows(tmp_path / "screen.csv")
    assert [row["rank"] for row in rows] == ["1", "2"]

def test_missing_price_file_exits_with_input_error(fixtures_dir, tmp_path, capsys):
    assert run(fixtures_dir / "missing_prices_config.json", tmp_path, "value") == 2
    error: str = capsys.readouterr().err
    assert "acme_prices_missing.csv" in error
    assert "[ACME]" in error

def test_missing_config_exits_with_input_error(tmp_path):
    assert run(tmp_path / "nowhere.json", tmp_path, "value") == 2

def test_non_positive_market_price_exits_with_numerical_error(fixtures_dir, tmp_path, capsys):
    assert run(fixtures_dir / "nonpositive_market_config.json", tmp_path, "safety") == 3
    assert "[ACME]" in capsys.readouterr().err

def test_seed_must_fit_in_64_bits(demo_config_path, tmp_path):
    with pytest.raises(SystemExit):
        run(demo_config_path, tmp_path, "value", "--seed", str(2 ** 64))
