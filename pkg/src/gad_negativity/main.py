#!/usr/bin/env python3
"""Main entry point for the gad-negativity command."""

import argparse
import logging
import sys
from typing import Any, Optional

from . import __package_name__, __version__
from .commands import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    build_config,
    cmd_defaults,
    cmd_grid,
    cmd_plot_script,
    cmd_presets,
    cmd_sweep,
    cmd_verify,
    parse_initial,
    parse_list,
)
from .config import settings
from .core.channel import NoiseMode
from .core.errors import (
    ChannelError,
    ConfigError,
    InvalidStateError,
    NumericalError,
    ParameterRangeError,
)
from .models import VerificationLevel

# Configure logging
logger = logging.getLogger(__name__)

RUN_COMMANDS = ("sweep", "grid", "plot-script", "defaults")


def setup_logging(verbosity: int) -> None:
    """Configure logging based on verbosity level."""
    log_levels = {
        0: logging.WARNING,
        1: logging.INFO,
        2: logging.DEBUG,
    }
    level = log_levels.get(min(verbosity, 2), logging.DEBUG)
    if verbosity == 0 and settings.LOG_LEVEL:
        level = logging.getLevelName(settings.LOG_LEVEL.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON run configuration")
    parser.add_argument("--preset", metavar="NAME", help="start from a named figure preset")
    parser.add_argument(
        "--initial",
        metavar="SPEC",
        help="initial state: bell:c1,c2,c3 | werner:x | singlet | mixed",
    )
    parser.add_argument("--mode", choices=[m.value for m in NoiseMode], help="noise mode")
    parser.add_argument("--p", metavar="LIST", help="comma-separated p values")
    gamma = parser.add_mutually_exclusive_group()
    gamma.add_argument("--gamma-count", type=int, metavar="N", help="uniform gamma points")
    gamma.add_argument("--gamma", metavar="LIST", help="explicit comma-separated gamma values")
    parser.add_argument("--out", metavar="PATH", help="result CSV path")
    parser.add_argument("--plot-out", metavar="PATH", help="plot script path")
    parser.add_argument(
        "--compare-formulas",
        action="store_true",
        default=None,
        help="add the printed-coefficient discrepancy column",
    )
    parser.add_argument("--zero-tol", type=float, metavar="X")
    parser.add_argument("--slope-eps", type=float, metavar="X")
    parser.add_argument("--min-len", type=float, metavar="X")
    parser.add_argument("--kink-threshold", type=float, metavar="X")


def parse_args(args: Optional[list[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog=__package_name__,
        description="Two-qubit negativity under correlated and uncorrelated GAD noise",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    parser.add_argument(
        "--version",
        action="version",
        version=f"{__package_name__} {__version__}",
    )

    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase verbosity (can be repeated: -v, -vv)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="negativity against gamma for each p")
    _add_run_options(sweep)
    sweep.add_argument("--json", action="store_true", help="print reports as JSON")

    grid = sub.add_parser("grid", help="(p, gamma) or initial-state surface")
    _add_run_options(grid)
    grid.add_argument(
        "--census", action="store_true", help="also compare noise modes on the same grid"
    )

    plot = sub.add_parser("plot-script", help="gnuplot script for a result CSV")
    _add_run_options(plot)

    defaults = sub.add_parser("defaults", help="print the resolved run configuration")
    _add_run_options(defaults)

    verify = sub.add_parser("verify", help="run the self-check suite")
    verify.add_argument(
        "--level",
        choices=[level.value for level in VerificationLevel],
        default=VerificationLevel.FAST.value,
    )
    verify.add_argument("--seed", type=int, default=settings.SEED)
    verify.add_argument(
        "--literal-kraus",
        action="store_true",
        help="check the printed operator set instead of the canonical one",
    )
    verify.add_argument("--json", action="store_true", help="print the report as JSON")

    sub.add_parser("presets", help="list figure presets")

    return parser.parse_args(args)


def overrides_from_args(args: argparse.Namespace) -> dict[str, Any]:
    """Flag values that were actually given, shaped like RunConfig fields."""
    overrides: dict[str, Any] = {}
    if args.initial:
        overrides["initial"] = parse_initial(args.initial)
    if args.mode:
        overrides["mode"] = args.mode
    if args.p is not None:
        overrides["p"] = parse_list(args.p, "p")
    if args.gamma_count is not None:
        overrides["gamma"] = {"kind": "count", "count": args.gamma_count}
    if args.gamma is not None:
        overrides["gamma"] = {"kind": "values", "values": parse_list(args.gamma, "gamma")}
    if args.out:
        overrides["out"] = args.out
    if args.plot_out:
        overrides["plot_out"] = args.plot_out
    if args.compare_formulas:
        overrides["compare_formulas"] = True
    thresholds = {
        name: getattr(args, name)
        for name in ("zero_tol", "slope_eps", "min_len", "kink_threshold")
        if getattr(args, name) is not None
    }
    if thresholds:
        overrides["thresholds"] = thresholds
    return overrides


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "presets":
        return cmd_presets()
    if args.command == "verify":
        return cmd_verify(
            VerificationLevel(args.level),
            args.seed,
            literal_kraus=args.literal_kraus,
            as_json=args.json,
        )

    config = build_config(args.preset, args.config, overrides_from_args(args))
    if args.command == "sweep":
        return cmd_sweep(config, as_json=args.json)
    if args.command == "grid":
        return cmd_grid(config, census=args.census)
    if args.command == "plot-script":
        return cmd_plot_script(config)
    return cmd_defaults(config)


def main(args: Optional[list[str]] = None) -> int:
    """Main entry point for the gad-negativity command."""
    try:
        parsed_args = parse_args(args)
        setup_logging(parsed_args.verbose)

        logger.debug("Starting %s v%s", __package_name__, __version__)
        return dispatch(parsed_args)

    except (ConfigError, InvalidStateError, ParameterRangeError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, ChannelError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return 130
    except Exception as e:
        logger.exception("Unexpected error: %s", e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
