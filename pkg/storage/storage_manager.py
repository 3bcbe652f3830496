from pathlib import Path
from models.config_models import AssetConfig
from models.fundamental_models import FundamentalSeries, PricePoint
from storage.fundamentals_interface import FundamentalsInterface
from storage.prices_interface import PricesInterface
from storage.report_interface import ReportInterface


class StorageManager:
    """
    Class providing access to the file specific interfaces.
    Instantiate once per run and use it for every file interaction.
    """
    fundamentals_interface: FundamentalsInterface
    prices_interface: PricesInterface
    report_interface: ReportInterface

    def __init__(self, output_dir: str | Path = "out") -> None:
        """
        Args:
            output_dir (str | Path, optional): Directory receiving reports. Defaults to "out".
        """
        self.fundamentals_interface = FundamentalsInterface()
        self.prices_interface = PricesInterface()
        self.report_interface = ReportInterface(output_dir=output_dir)

    def load_prices(self, asset: AssetConfig) -> list[PricePoint]:
        """
        Loads the price history of an asset. An asset without a price file has no prices.
        """
        if asset.prices is None: return []
        return self.prices_interface.get_prices(path=asset.prices)

    def load_series(self, asset: AssetConfig) -> FundamentalSeries:
        """
        Loads the fundamentals and prices of an asset into a FundamentalSeries.

        Args:
            asset (AssetConfig): The configured asset, paths already resolved.

        Returns:
            FundamentalSeries: The asset panel (periods are empty for non-Dynamic assets without a fundamentals file).
        """
        periods = [] if asset.fundamentals is None else \
            self.fundamentals_interface.get_periods(path=asset.fundamentals)
        return FundamentalSeries(asset_id=asset.asset_id, kind=asset.kind, periods=periods,
                                 prices=self.load_prices(asset=asset), maturity=asset.maturity)
