"""CSV result files for sweeps, grids and initial-state surfaces.

Layout: ``#`` comment header (config echo, thresholds, reports), one column
header line, then data. Sweep curves are separated by two blank lines and
grid scan rows by one, each block opened by a ``# p = <value>`` comment.
Numbers are written with 17 significant digits so floats round-trip exactly.
"""

import csv
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .. import __package_name__
from ..core.errors import ConfigError
from ..models import PhenomenonReport, RunConfig
from .sweep import SweepResult, SweepSample

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ("gamma", "negativity")
COMPARE_COLUMNS = ("gamma", "negativity", "discrepancy")
GRID_COLUMNS = ("p", "gamma", "negativity")
SURFACE_COLUMNS = ("c2", "c3", "negativity")

CONFIG_PREFIX = "# config = "
BLOCK_PREFIX = "# p = "
FOOTER_PREFIX = "# max_discrepancy = "


def fmt(value: float) -> str:
    return format(float(value), ".17g")


@dataclass
class SweepTable:
    """A sweep CSV read back from disk."""

    config: Optional[RunConfig]
    columns: tuple[str, ...]
    blocks: list[tuple[float, tuple[SweepSample, ...]]] = field(default_factory=list)
    max_discrepancy: Optional[float] = None

    def samples_for(self, p: float) -> tuple[SweepSample, ...]:
        for block_p, samples in self.blocks:
            if block_p == p:
                return samples
        raise KeyError(p)


def _header_lines(kind: str, config: RunConfig) -> list[str]:
    t = config.thresholds
    return [
        f"# {__package_name__} {kind}",
        CONFIG_PREFIX + config.model_dump_json(),
        f"# thresholds: zero_tol={t.zero_tol:g}, slope_eps={t.slope_eps:g}, "
        f"min_len={t.min_len:g}, kink_threshold={t.kink_threshold:g}",
    ]


def _write(
    path: Path,
    lines: Iterable[str],
    rows_by_block: Iterable[tuple[list[str], list[list[str]]]],
    separator: str,
    footer: Sequence[str] = (),
) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        for line in lines:
            f.write(line + "\n")
        writer = csv.writer(f, lineterminator="\n")
        for index, (comments, rows) in enumerate(rows_by_block):
            if index:
                f.write(separator)
            for comment in comments:
                f.write(comment + "\n")
            writer.writerows(rows)
        for line in footer:
            f.write(line + "\n")
    logger.info("Wrote %s", path)


def write_sweep_csv(
    path: "str | Path",
    results: Sequence[SweepResult],
    config: RunConfig,
    reports: Sequence[PhenomenonReport] = (),
) -> Path:
    """One curve block per p; adds a discrepancy column when comparing formulas."""
    path = Path(path)
    compare = config.compare_formulas
    columns = COMPARE_COLUMNS if compare else SWEEP_COLUMNS
    header = _header_lines("sweep", config)
    header += [f"# report = {report.model_dump_json()}" for report in reports]
    header.append(",".join(columns))

    blocks = []
    for result in results:
        rows = []
        for s in result.samples:
            row = [fmt(s.gamma), fmt(s.negativity)]
            if compare:
                row.append(fmt(s.discrepancy))
            rows.append(row)
        blocks.append(([BLOCK_PREFIX + fmt(result.spec.p)], rows))

    footer = []
    if compare:
        finite = [r.max_discrepancy for r in results if not math.isnan(r.max_discrepancy)]
        worst = max(finite, default=math.nan)
        footer.append(FOOTER_PREFIX + fmt(worst))
        logger.info("Max formula discrepancy %s", fmt(worst))
    _write(path, header, blocks, "\n\n", footer)
    return path


def write_grid_csv(path: "str | Path", results: Sequence[SweepResult], config: RunConfig) -> Path:
    """Long-format (p, gamma, negativity) rows, one scan line per p."""
    path = Path(path)
    header = _header_lines("grid", config) + [",".join(GRID_COLUMNS)]
    blocks = [
        (
            [BLOCK_PREFIX + fmt(result.spec.p)],
            [[fmt(result.spec.p), fmt(s.gamma), fmt(s.negativity)] for s in result.samples],
        )
        for result in results
    ]
    _write(path, header, blocks, "\n")
    return path


def write_surface_csv(
    path: "str | Path",
    c2_axis: np.ndarray,
    c3_axis: np.ndarray,
    values: np.ndarray,
    config: RunConfig,
) -> Path:
    """(c2, c3, negativity) rows, one scan line per c2; unphysical points are nan."""
    path = Path(path)
    header = _header_lines("surface", config) + [",".join(SURFACE_COLUMNS)]
    blocks = [
        (
            [],
            [[fmt(c2), fmt(c3), fmt(values[i, j])] for j, c3 in enumerate(c3_axis)],
        )
        for i, c2 in enumerate(c2_axis)
    ]
    _write(path, header, blocks, "\n")
    return path


def _read_lines(path: Path) -> list[str]:
    if not path.is_file():
        raise ConfigError(f"CSV file not found: {path}")
    return path.read_text(encoding="utf-8").splitlines()


def read_config_echo(path: "str | Path") -> Optional[RunConfig]:
    """The RunConfig echoed in a result header, if present."""
    for line in _read_lines(Path(path)):
        if not line.startswith("#"):
            break
        if line.startswith(CONFIG_PREFIX):
            return RunConfig.model_validate_json(line[len(CONFIG_PREFIX):])
    return None


def read_sweep_csv(path: "str | Path") -> SweepTable:
    """Parse a sweep CSV back into per-p sample blocks."""
    path = Path(path)
    table = SweepTable(config=None, columns=())
    current: Optional[tuple[float, list[SweepSample]]] = None

    def flush() -> None:
        if current is not None:
            table.blocks.append((current[0], tuple(current[1])))

    for line in _read_lines(path):
        if not line.strip():
            continue
        if line.startswith(CONFIG_PREFIX):
            table.config = RunConfig.model_validate_json(line[len(CONFIG_PREFIX):])
        elif line.startswith(BLOCK_PREFIX):
            flush()
            current = (float(line[len(BLOCK_PREFIX):]), [])
        elif line.startswith(FOOTER_PREFIX):
            table.max_discrepancy = float(line[len(FOOTER_PREFIX):])
        elif line.startswith("#"):
            continue
        elif not table.columns:
            table.columns = tuple(line.split(","))
        else:
            if current is None:
                raise ConfigError(f"{path}: data row before any '# p = ' block")
            fields = next(csv.reader([line]))
            gamma, value = float(fields[0]), float(fields[1])
            discrepancy = float(fields[2]) if len(fields) > 2 else math.nan
            current[1].append(SweepSample(gamma, value, discrepancy, gap=math.isnan(value)))
    flush()
    return table


def read_grid_csv(path: "str | Path") -> list[tuple[float, ...]]:
    """Data rows of a grid or surface CSV as float tuples."""
    rows: list[tuple[float, ...]] = []
    seen_columns = False
    for line in _read_lines(Path(path)):
        if not line.strip() or line.startswith("#"):
            continue
        if not seen_columns:
            seen_columns = True
            continue
        rows.append(tuple(float(v) for v in next(csv.reader([line]))))
    return rows


def detect_layout(path: "str | Path") -> str:
    """``sweep``, ``grid`` or ``surface`` from the first header line."""
    lines = _read_lines(Path(path))
    first = lines[0] if lines else ""
    for kind in ("sweep", "grid", "surface"):
        if first.endswith(f" {kind}"):
            return kind
    raise ConfigError(f"{path} is not a {__package_name__} result file")

