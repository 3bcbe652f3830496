import json
from pathlib import Path
import pytest
from models.fundamental_models import AssetKind, FundamentalSeries, PeriodRecord, PricePoint

FIXTURES_DIR: Path = Path(__file__).resolve().parent.parent / "fixtures"


def make_series(revenues: list[float], factors: dict[str, list[float]], asset_id: str = "TEST",
                prices: list[float] | None = None) -> FundamentalSeries:
    """
    Builds a Dynamic FundamentalSeries with periods numbered from 1.
    """
    periods: list[PeriodRecord] = [
        PeriodRecord(period_index=index + 1, revenue=revenue,
                     factors={name: values[index] for name, values in factors.items()})
        for index, revenue in enumerate(revenues)
    ]
    price_points: list[PricePoint] = [PricePoint(period_index=index + 1, price=price)
                                      for index, price in enumerate(prices or [])]
    return FundamentalSeries(asset_id=asset_id, kind=AssetKind.DYNAMIC, periods=periods, prices=price_points)

@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR

@pytest.fixture
def demo_config_path() -> Path:
    return FIXTURES_DIR / "demo_config.json"

@pytest.fixture
def steady_series() -> FundamentalSeries:
    """
    Revenue growing 25% a period with constant 50% costs. Every value is exact in binary, so every
    normalized statistic has zero dispersion.
    """
    revenues: list[float] = [64.0, 80.0, 100.0, 125.0, 156.25, 195.3125]
    return make_series(revenues=revenues, factors={"costs": [0.5 * revenue for revenue in revenues]})

@pytest.fixture
def write_config(tmp_path):
    """
    Writes a run configuration next to copies of the fixture CSVs and returns its path.
    """
    def writer(config: dict) -> Path:
        for source in FIXTURES_DIR.glob("*.csv"):
            (tmp_path / source.name).write_text(source.read_text(encoding="utf-8"), encoding="utf-8")
        path: Path = tmp_path / "config.json"
        path.write_text(json.dumps(config), encoding="utf-8")
        return path
    return writer
