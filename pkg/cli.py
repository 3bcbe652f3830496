import argparse
import logging
import sys
from pathlib import Path
from typing import Callable
from config.config import load_run_config
from models.config_models import OutputFormat, RunConfig
from models.error_models import OpenValueError
from services.report_services import run_allocate, run_safety, run_screen, run_value
from storage.storage_manager import StorageManager

logger = logging.getLogger(__name__)

COMMANDS: dict[str, Callable[[RunConfig, StorageManager], list[Path]]] = {
    "value": run_value,
    "safety": run_safety,
    "allocate": run_allocate,
    "screen": run_screen,
}


def u64(value: str) -> int:
    """
    argparse type for an unsigned 64-bit seed.
    """
    seed: int = int(value)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"Seed must fit in an unsigned 64-bit integer. Got: {value}")
    return seed

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openvalue",
        description="Normalize fundamentals, value assets by Monte Carlo and size positions with the Kelly criterion."
    )
    parser.add_argument("--config", required=True, help="Path to the JSON run configuration")
    parser.add_argument("--seed", type=u64, default=None, help="Overrides simulation.seed")
    parser.add_argument("--out", default=None, help="Overrides the output directory")
    parser.add_argument("--format", choices=[output_format.value for output_format in OutputFormat], default=None,
                        help="Overrides the output format")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("value", help="Value every asset")
    subparsers.add_parser("safety", help="Margin of safety and GB-ratio of the Dynamic assets")
    subparsers.add_parser("allocate", help="Kelly allocation under the ruin cap, with weighting curves")
    subparsers.add_parser("screen", help="GB-ratio screen and (delta, sigma) efficient set")
    return parser

def main(argv: list[str] | None = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv (list[str] | None, optional): Command-line arguments. Defaults to sys.argv[1:].

    Returns:
        int: 0 on success, 2 on an input error, 3 on a numerical error.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        run_config: RunConfig = load_run_config(path=args.config, seed=args.seed, output_dir=args.out,
                                                output_format=args.format)
        storage_manager: StorageManager = StorageManager(output_dir=run_config.output_dir)
        written: list[Path] = COMMANDS[args.command](run_config, storage_manager)
    except OpenValueError as error:
        logger.error("%s failed: %s", args.command, error)
        print(f"error: {error}", file=sys.stderr)
        return error.exit_code
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
