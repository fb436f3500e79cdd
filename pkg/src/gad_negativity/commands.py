"""Subcommand handlers behind the command-line front end."""

import json
import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

from .config import settings
from .core.channel import NoiseMode
from .core.errors import ConfigError, NumericalError
from .models import (
    PhenomenonReport,
    RunConfig,
    VerificationLevel,
    config_error_message,
)
from .presets import PRESETS, get_preset
from .services.detectors import classify_phenomena
from .services.plotting import write_plot_script
from .services.results import write_grid_csv, write_surface_csv, write_sweep_csv
from .services.sweep import SweepResult, census_from_results, initial_surface, sweep_grid
from .services.verification import format_report, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY = 3


# Configuration assembly


def _merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if key == "thresholds" and isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return merged


def load_config_file(path: "str | Path") -> dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    return data


def parse_initial(spec: str) -> dict[str, Any]:
    """``bell:c1,c2,c3``, ``werner:x``, ``singlet`` or ``mixed`` as an initial-state dict."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        values = [float(v) for v in rest.split(",")] if rest.strip() else []
    except ValueError as exc:
        raise ConfigError(f"bad --initial value {spec!r}") from exc
    if kind in ("bell", "bell_diagonal") and len(values) == 3:
        return {"kind": "bell_diagonal", "c1": values[0], "c2": values[1], "c3": values[2]}
    if kind == "werner" and len(values) == 1:
        return {"kind": "werner", "x": values[0]}
    if kind == "singlet" and not values:
        return {"kind": "bell_diagonal", "c1": -1.0, "c2": -1.0, "c3": -1.0}
    if kind == "mixed" and not values:
        return {"kind": "bell_diagonal", "c1": 0.0, "c2": 0.0, "c3": 0.0}
    raise ConfigError(
        f"bad --initial value {spec!r}; expected bell:c1,c2,c3, werner:x, singlet or mixed"
    )


def parse_list(text: str, name: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad --{name} list {text!r}") from exc


def build_config(
    preset: Optional[str] = None,
    config_path: Optional[str] = None,
    overrides: Optional[dict[str, Any]] = None,
) -> RunConfig:
    """Defaults < preset < config file < flag overrides, validated once at the end.

    Raises:
        ConfigError: for unknown presets, unreadable files and invalid values.
    """
    data: dict[str, Any] = RunConfig().model_dump(mode="json")
    if preset:
        data = _merge(data, get_preset(preset).config.model_dump(mode="json"))
    if config_path:
        data = _merge(data, load_config_file(config_path))
    if overrides:
        data = _merge(data, overrides)
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"invalid configuration: {config_error_message(exc)}") from exc


# Handlers


def format_phenomena(report: PhenomenonReport) -> str:
    death = "none" if report.sudden_death_gamma is None else f"{report.sudden_death_gamma:g}"
    changes = ", ".join(f"{g:g}" for g in report.change_points) or "none"
    frozen = ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in report.frozen_intervals) or "none"
    lines = [
        f"p = {report.p:g} ({report.mode.value})",
        f"  sudden death:   {death}",
        f"  change points:  {changes} ({report.change_kind})",
        f"  frozen:         {frozen}",
        f"  monotone decay: {str(report.monotone_decay).lower()}",
    ]
    if report.gap_count:
        lines.append(f"  gap samples:    {report.gap_count}")
    return "\n".join(lines)


def _run_sweeps(config: RunConfig) -> list[SweepResult]:
    results = sweep_grid(
        config.initial_fano(),
        config.p,
        config.gamma_grid(),
        config.mode,
        compare_formulas=config.compare_formulas,
    )
    if all(result.gap_count == len(result.samples) for result in results):
        raise NumericalError("correlated map annihilated the state at every grid point")
    return results


def cmd_sweep(config: RunConfig, as_json: bool = False) -> int:
    """Sweep gamma for each p, write the curve CSV and print phenomenon reports."""
    results = _run_sweeps(config)
    reports = [classify_phenomena(result, config.thresholds) for result in results]
    write_sweep_csv(config.out, results, config, reports)
    if as_json:
        print(json.dumps([report.model_dump(mode="json") for report in reports], indent=2))
    else:
        print(f"wrote {config.out}")
        for report in reports:
            print(format_phenomena(report))
    return EXIT_OK


def cmd_grid(config: RunConfig, census: bool = False) -> int:
    """Write a (p, gamma) surface, or the initial-state surface when configured.

    Raises:
        ConfigError: if ``census`` is requested for an initial-state surface.
    """
    if config.surface is not None:
        if census:
            raise ConfigError("--census needs a (p, gamma) grid, not an initial-state surface")
        c2_axis, c3_axis = config.surface.axes()
        values = initial_surface(config.surface.c1, c2_axis, c3_axis)
        write_surface_csv(config.out, c2_axis, c3_axis, values, config)
        print(f"wrote {config.out}")
        return EXIT_OK

    results = _run_sweeps(config)
    write_grid_csv(config.out, results, config)
    print(f"wrote {config.out}")
    if census:
        other_mode = (
            NoiseMode.UNCORRELATED if config.mode is NoiseMode.CORRELATED else NoiseMode.CORRELATED
        )
        other = sweep_grid(config.initial_fano(), config.p, config.gamma_grid(), other_mode)
        by_mode = {config.mode: results, other_mode: other}
        summary = census_from_results(
            by_mode[NoiseMode.CORRELATED],
            by_mode[NoiseMode.UNCORRELATED],
            config.thresholds.zero_tol,
        )
        print(
            f"mode census: uncorrelated <= correlated at {summary.uncorrelated_not_larger} "
            f"of {summary.entangled_points} entangled points (fraction {summary.fraction:.4f})"
        )
    return EXIT_OK


def cmd_verify(
    level: VerificationLevel = VerificationLevel.FAST,
    seed: int = settings.SEED,
    literal_kraus: bool = False,
    as_json: bool = False,
) -> int:
    """Run the self-check suite; exit 3 on any hard failure."""
    report = run_verification(level, seed, literal_kraus=literal_kraus)
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(format_report(report))
    for failure in report.failures:
        logger.error("verification check failed: %s", failure.name)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_plot_script(config: RunConfig) -> int:
    """Write a gnuplot script for ``config.out``."""
    path = write_plot_script(config.out, config.resolved_plot_out())
    print(f"wrote {path}")
    return EXIT_OK


def cmd_defaults(config: RunConfig) -> int:
    print(config.model_dump_json(indent=2))
    return EXIT_OK


def cmd_presets() -> int:
    width = max(len(name) for name in PRESETS)
    for preset in PRESETS.values():
        print(f"{preset.name:<{width}}  {preset.command:<5}  {preset.description}")
    return EXIT_OK
