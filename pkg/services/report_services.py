import logging
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any
from config.config import APP_VERSION
from models.config_models import AssetConfig, OutputFormat, RunConfig
from models.error_models import OpenValueError
from models.fundamental_models import FundamentalSeries
from models.kelly_models import CurvePoint, KellyDecision
from models.portfolio_models import Allocation
from models.report_models import ReportMeta
from models.safety_models import SafetyReport
from services.portfolio_services import build_allocation, build_curve
from services.safety_services import build_safety_reports, screen_assets
from services.valuation_services import AssetValuation, value_asset
from storage.storage_manager import StorageManager
from utils.hash_utils import hash_model
from validators.config_validators import validate_run_config_files

logger = logging.getLogger(__name__)

VALUE_COLUMNS: list[str] = ["asset_id", "kind", "mean_price", "std_price", "first_flow", "price_multiple",
                            "growth_constant", "n_samples", "rejected_samples", "sample_min", "sample_max",
                            "drift_stable"]
SAFETY_COLUMNS: list[str] = ["asset_id", "N", "M", "delta", "classic_s", "price_dispersion", "gb_ratio",
                             "growth_constant", "valuation_price", "market_price"]


def build_meta(run_config: RunConfig) -> ReportMeta:
    """
    Reproducibility stamp of a run: seed, configuration hash and version. The output location is not
    part of the hash.
    """
    return ReportMeta(seed=run_config.simulation.seed,
                      config_hash=hash_model(model=run_config, exclude={"output_dir"}), version=APP_VERSION)

def load_and_value(asset: AssetConfig, run_config: RunConfig, storage_manager: StorageManager) -> AssetValuation:
    try:
        series: FundamentalSeries = storage_manager.load_series(asset=asset)
    except OpenValueError as error:
        raise error.with_asset(asset.asset_id)
    return value_asset(asset=asset, series=series, run_config=run_config)

def value_all(run_config: RunConfig, storage_manager: StorageManager) -> list[AssetValuation]:
    """
    Loads and values every configured asset concurrently. Results keep the configured asset order.
    """
    validate_run_config_files(run_config=run_config)
    workers: int = max(1, min(len(run_config.assets), os.cpu_count() or 1))
    logger.debug("Valuing %d assets on %d workers.", len(run_config.assets), workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda asset: load_and_value(asset=asset, run_config=run_config,
                                                              storage_manager=storage_manager),
                                 run_config.assets))

def dump_samples(valuations: list[AssetValuation], run_config: RunConfig, storage_manager: StorageManager,
                 meta: ReportMeta) -> list[Path]:
    if not run_config.simulation.dump_samples: return []
    return [storage_manager.report_interface.write_csv(file_name=f"samples_{valuation.asset.asset_id}.csv",
                                                       header=["price"],
                                                       rows=[[price] for price in valuation.distribution.samples],
                                                       meta=meta)
            for valuation in valuations if valuation.distribution is not None]

def run_value(run_config: RunConfig, storage_manager: StorageManager) -> list[Path]:
    """
    Values every asset and writes the valuation report.

    Returns:
        list[Path]: The written files.
    """
    meta: ReportMeta = build_meta(run_config=run_config)
    valuations: list[AssetValuation] = value_all(run_config=run_config, storage_manager=storage_manager)
    written: list[Path] = dump_samples(valuations=valuations, run_config=run_config,
                                       storage_manager=storage_manager, meta=meta)
    if run_config.output_format == OutputFormat.CSV:
        rows: list[list[Any]] = []
        for valuation in valuations:
            record: dict[str, Any] = valuation.result.model_dump(mode="json")
            record["drift_stable"] = None if valuation.drift is None else valuation.drift.stable
            rows.append([record[column] for column in VALUE_COLUMNS])
        written.append(storage_manager.report_interface.write_csv(file_name="value.csv", header=VALUE_COLUMNS,
                                                                  rows=rows, meta=meta))
        return written
    assets: list[dict[str, Any]] = []
    for valuation in valuations:
        record = valuation.result.model_dump(mode="json")
        record["drift"] = None if valuation.drift is None else valuation.drift.model_dump(mode="json")
        assets.append(record)
    written.append(storage_manager.report_interface.write_json(file_name="value.json",
                                                               payload={"N": run_config.nrr.N, "assets": assets},
                                                               meta=meta))
    return written

def run_safety(run_config: RunConfig, storage_manager: StorageManager) -> list[Path]:
    """
    Values every asset and writes the margin of safety report of the Dynamic ones.
    """
    meta: ReportMeta = build_meta(run_config=run_config)
    valuations: list[AssetValuation] = value_all(run_config=run_config, storage_manager=storage_manager)
    reports: dict[str, SafetyReport] = build_safety_reports(valuations=valuations, run_config=run_config)
    if run_config.output_format == OutputFormat.CSV:
        rows: list[list[Any]] = [[report.model_dump()[column] for column in SAFETY_COLUMNS]
                                 for report in reports.values()]
        return [storage_manager.report_interface.write_csv(file_name="safety.csv", header=SAFETY_COLUMNS,
                                                           rows=rows, meta=meta)]
    payload: dict[str, Any] = {"reports": [report.model_dump(mode="json") for report in reports.values()]}
    return [storage_manager.report_interface.write_json(file_name="safety.json", payload=payload, meta=meta)]

def run_screen(run_config: RunConfig, storage_manager: StorageManager) -> list[Path]:
    """
    Writes the GB-ratio screen and the (delta, sigma) efficient set of the Dynamic assets.
    """
    meta: ReportMeta = build_meta(run_config=run_config)
    valuations: list[AssetValuation] = value_all(run_config=run_config, storage_manager=storage_manager)
    reports: dict[str, SafetyReport] = build_safety_reports(valuations=valuations, run_config=run_config)
    screened, efficient, zero_dispersion = screen_assets(reports=reports, run_config=run_config)
    efficient_ids: set[str] = {point.asset_id for point in efficient}
    if run_config.output_format == OutputFormat.CSV:
        header: list[str] = ["rank", "asset_id", "gb_ratio", "delta", "price_dispersion", "efficient"]
        rows: list[list[Any]] = [[rank, asset_id, reports[asset_id].gb_ratio, reports[asset_id].delta,
                                  reports[asset_id].price_dispersion, asset_id in efficient_ids]
                                 for rank, asset_id in enumerate(screened, start=1)]
        return [storage_manager.report_interface.write_csv(file_name="screen.csv", header=header, rows=rows,
                                                           meta=meta)]
    payload: dict[str, Any] = {
        "min_gb": run_config.portfolio.min_gb,
        "screened": [{"asset_id": asset_id, "gb_ratio": reports[asset_id].gb_ratio, "delta": reports[asset_id].delta}
                     for asset_id in screened],
        "efficient_set": [point._asdict() for point in efficient],
        "zero_dispersion": zero_dispersion,
    }
    return [storage_manager.report_interface.write_json(file_name="screen.json", payload=payload, meta=meta)]

def write_curves(valuations: list[AssetValuation], run_config: RunConfig, storage_manager: StorageManager,
                 meta: ReportMeta) -> list[Path]:
    written: list[Path] = []
    for valuation in valuations:
        if not valuation.is_dynamic: continue
        curve: list[CurvePoint] = build_curve(valuation=valuation, run_config=run_config)
        written.append(storage_manager.report_interface.write_csv(
            file_name=f"curve_{valuation.asset.asset_id}.csv", header=["price", "wager"],
            rows=[[point.price, point.wager] for point in curve], meta=meta))
    return written

def run_allocate(run_config: RunConfig, storage_manager: StorageManager) -> list[Path]:
    """
    Runs the full chain and writes the allocation report and one weighting curve per Dynamic asset.
    """
    meta: ReportMeta = build_meta(run_config=run_config)
    valuations: list[AssetValuation] = value_all(run_config=run_config, storage_manager=storage_manager)
    allocation, decisions = build_allocation(valuations=valuations, run_config=run_config)
    written: list[Path] = write_curves(valuations=valuations, run_config=run_config,
                                       storage_manager=storage_manager, meta=meta)
    if run_config.output_format == OutputFormat.CSV:
        rows: list[list[Any]] = [[asset_id, weight, decisions[asset_id].wager, decisions[asset_id].signal.value]
                                 for asset_id, weight in allocation.weights.items()]
        rows.append(["cash", allocation.cash_weight, None, None])
        written.append(storage_manager.report_interface.write_csv(
            file_name="allocation.csv", header=["asset_id", "weight", "wager", "signal"], rows=rows, meta=meta))
        correlation_rows: list[list[Any]] = [[asset_id, *values] for asset_id, values
                                             in zip(allocation.correlation.asset_ids, allocation.correlation.values)]
        written.append(storage_manager.report_interface.write_csv(
            file_name="correlation.csv", header=["asset_id", *allocation.correlation.asset_ids],
            rows=correlation_rows, meta=meta))
        return written
    payload: dict[str, Any] = allocation_payload(allocation=allocation, decisions=decisions)
    written.append(storage_manager.report_interface.write_json(file_name="allocation.json", payload=payload,
                                                               meta=meta))
    return written

def allocation_payload(allocation: Allocation, decisions: dict[str, KellyDecision]) -> dict[str, Any]:
    return {
        "weights": allocation.weights,
        "cash_weight": allocation.cash_weight,
        "gross_invested": allocation.gross_invested,
        "ruin_cap": allocation.ruin_cap,
        "scaled": allocation.scaled,
        "correlation_assets": allocation.correlation.asset_ids,
        "correlations": allocation.correlation.values,
        "zero_dispersion": allocation.correlation.zero_dispersion,
        "decisions": {asset_id: decision.model_dump(mode="json") for asset_id, decision in decisions.items()},
    }
