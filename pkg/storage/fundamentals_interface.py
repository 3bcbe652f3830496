from pathlib import Path
import math
import pandas as pd
from models.error_models import InputFileError, MissingFactorValue
from models.fundamental_models import PeriodRecord
from storage.csv_generic_interface import CSVGenericInterface


class FundamentalsInterface(CSVGenericInterface):
    """
    Class for reading fundamentals files: `period,revenue,<factor1>,<factor2>,...`.
    Derived from the CSVGenericInterface class.
    """
    def __init__(self) -> None:
        super().__init__(required_columns=["period", "revenue"])

    def get_periods(self, path: str | Path) -> list[PeriodRecord]:
        """
        Reads the fundamentals panel of one asset.

        Args:
            path (str | Path): The fundamentals CSV.

        Returns:
            list[PeriodRecord]: One record per row, in file order.
        """
        frame: pd.DataFrame = self.read_frame(path=path)
        factor_names: list[str] = [column for column in frame.columns if column not in self.required_columns]
        if not factor_names:
            raise InputFileError(f'File "{path}" has no factor columns.')
        periods: list[int] = self.integer_column(frame=frame, column="period", path=path)
        revenues: list[float] = self.float_column(frame=frame, column="revenue", path=path)
        factors: dict[str, list[float]] = {name: self.float_column(frame=frame, column=name, path=path,
                                                                   allow_missing=True)
                                           for name in factor_names}
        records: list[PeriodRecord] = []
        for row, period_index in enumerate(periods):
            row_factors: dict[str, float] = {name: factors[name][row] for name in factor_names}
            for name, value in row_factors.items():
                if math.isnan(value):
                    raise MissingFactorValue(f'Factor "{name}" is missing in period {period_index} of "{path}".')
            records.append(PeriodRecord(period_index=period_index, revenue=revenues[row], factors=row_factors))
        return records
