from pathlib import Path
import pandas as pd
from models.error_models import InputFileError


class CSVGenericInterface:
    """
    Base class for reading tabular input files. It provides the basic functionalities shared by every CSV interface.
    """
    required_columns: list[str]

    def __init__(self, required_columns: list[str]) -> None:
        """
        Initializes the CSVGenericInterface object.

        Args:
            required_columns (list[str]): Case-sensitive column names every file must carry, in order.
        """
        self.required_columns = required_columns

    def read_frame(self, path: str | Path) -> pd.DataFrame:
        """
        Reads a UTF-8 CSV file with a header row into a DataFrame.

        Args:
            path (str | Path): The file to read.

        Returns:
            pd.DataFrame: The file contents, one row per record.
        """
        file_path: Path = Path(path)
        if not file_path.is_file():
            raise InputFileError(f'File does not exist: "{file_path}"')
        try:
            frame: pd.DataFrame = pd.read_csv(file_path, encoding="utf-8", comment="#")
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as error:
            raise InputFileError(f'Could not parse "{file_path}": {error}') from error
        missing: list[str] = [column for column in self.required_columns if column not in frame.columns]
        if missing:
            raise InputFileError(f'File "{file_path}" is missing columns {missing}; found {list(frame.columns)}.')
        return frame

    def integer_column(self, frame: pd.DataFrame, column: str, path: str | Path) -> list[int]:
        """
        Converts a column to integers, rejecting blanks and non-integral values.
        """
        values: pd.Series = pd.to_numeric(frame[column], errors="coerce")
        if values.isna().any() or not (values == values.round()).all():
            raise InputFileError(f'Column "{column}" of "{path}" must hold integers.')
        return [int(value) for value in values]

    def float_column(self, frame: pd.DataFrame, column: str, path: str | Path, allow_missing: bool = False) -> list[float]:
        """
        Converts a column to floats. Blank cells become NaN only when allow_missing is set.
        """
        raw: pd.Series = frame[column]
        values: pd.Series = pd.to_numeric(raw, errors="coerce")
        if (values.isna() & raw.notna()).any():
            raise InputFileError(f'Column "{column}" of "{path}" must hold decimal numbers.')
        if values.isna().any() and not allow_missing:
            raise InputFileError(f'Column "{column}" of "{path}" has blank cells.')
        return [float(value) for value in values]
