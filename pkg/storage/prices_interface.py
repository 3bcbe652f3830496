from pathlib import Path
import pandas as pd
from models.fundamental_models import PricePoint
from storage.csv_generic_interface import CSVGenericInterface


class PricesInterface(CSVGenericInterface):
    """
    Class for reading market price files: `period,price`.
    Derived from the CSVGenericInterface class.
    """
    def __init__(self) -> None:
        super().__init__(required_columns=["period", "price"])

    def get_prices(self, path: str | Path) -> list[PricePoint]:
        """
        Reads the market price history of one asset.

        Args:
            path (str | Path): The price CSV.

        Returns:
            list[PricePoint]: One point per row, in file order.
        """
        frame: pd.DataFrame = self.read_frame(path=path)
        periods: list[int] = self.integer_column(frame=frame, column="period", path=path)
        prices: list[float] = self.float_column(frame=frame, column="price", path=path)
        return [PricePoint(period_index=period_index, price=price) for period_index, price in zip(periods, prices)]
