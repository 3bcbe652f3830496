import csv
import json
from pathlib import Path
from typing import Any
from models.report_models import ReportMeta


def format_cell(value: Any) -> str:
    """
    Formats a CSV cell. Floats use repr so they round-trip exactly; None is an empty cell.
    """
    if value is None: return ""
    if isinstance(value, float): return repr(value)
    return str(value)

class ReportInterface:
    """
    Class for writing report files. Every file carries the run's ReportMeta and is byte-for-byte
    reproducible from the same inputs.
    """
    output_dir: Path

    def __init__(self, output_dir: str | Path) -> None:
        """
        Args:
            output_dir (str | Path): Directory receiving every report. Created if it does not exist.
        """
        self.output_dir = Path(output_dir)

    def path_for(self, file_name: str) -> Path:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        return self.output_dir / file_name

    def write_json(self, file_name: str, payload: dict[str, Any], meta: ReportMeta) -> Path:
        """
        Writes a JSON report with sorted keys and a `meta` object.

        Args:
            file_name (str): Name of the file inside the output directory.
            payload (dict[str, Any]): JSON-serializable report body.
            meta (ReportMeta): Reproducibility stamp.

        Returns:
            Path: The written file.
        """
        path: Path = self.path_for(file_name=file_name)
        document: dict[str, Any] = {"meta": meta.model_dump(), **payload}
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            file.write(json.dumps(document, sort_keys=True, indent=2, allow_nan=False))
            file.write("\n")
        return path

    def write_csv(self, file_name: str, header: list[str], rows: list[list[Any]], meta: ReportMeta) -> Path:
        """
        Writes a CSV report preceded by `# key=value` comment lines holding the meta stamp.

        Args:
            file_name (str): Name of the file inside the output directory.
            header (list[str]): Column names.
            rows (list[list[Any]]): Row values in column order.
            meta (ReportMeta): Reproducibility stamp.

        Returns:
            Path: The written file.
        """
        path: Path = self.path_for(file_name=file_name)
        with open(path, "w", encoding="utf-8", newline="") as file:
            for key, value in meta.model_dump().items():
                file.write(f"# {key}={value}\n")
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_cell(value) for value in row])
        return path
