"""gnuplot scripts that render result CSV files."""

import logging
from pathlib import Path
from typing import Optional

from .. import __package_name__
from .results import detect_layout, read_sweep_csv

logger = logging.getLogger(__name__)

PREAMBLE = """\
# generated by %(package)s from %(csv)s
set encoding utf8
set terminal pngcairo enhanced size 800,600
set output "%(image)s"
set datafile separator ","
# column header lines start with one of these letters
set datafile commentschars "#gpc"
"""

LINE_TEMPLATE = """\
set xlabel "γ"
set ylabel "𝒩"
set xrange [0:1]
set yrange [0:*]
set key top right
set style data lines
plot %(series)s
"""

SURFACE_TEMPLATE = """\
set xlabel "%(x)s"
set ylabel "%(y)s"
set zlabel "𝒩"
set pm3d at s
set palette rgbformulae 33,13,10
set view 60,30
splot "%(csv)s" using 1:2:3 with pm3d notitle
"""

DASHES = (1, 2, 3, 4, 5)


def line_script(csv_path: Path, p_values: list[float], image: str) -> str:
    series = []
    for index, p in enumerate(p_values):
        series.append(
            f'"{csv_path}" index {index} using 1:2 lw 2 dt {DASHES[index % len(DASHES)]} '
            f'title "p = {p:g}"'
        )
    body = LINE_TEMPLATE % {"series": ", \\\n     ".join(series)}
    return PREAMBLE % {"package": __package_name__, "csv": csv_path, "image": image} + body


def surface_script(csv_path: Path, x: str, y: str, image: str) -> str:
    body = SURFACE_TEMPLATE % {"x": x, "y": y, "csv": csv_path}
    return PREAMBLE % {"package": __package_name__, "csv": csv_path, "image": image} + body


def write_plot_script(
    csv_path: "str | Path", script_path: "str | Path", image: Optional[str] = None
) -> Path:
    """Write a line-plot (sweep) or surface (grid, surface) script for ``csv_path``.

    Raises:
        ConfigError: if ``csv_path`` does not exist or is not a result file.
    """
    csv_path = Path(csv_path)
    script_path = Path(script_path)
    layout = detect_layout(csv_path)
    image = image or str(script_path.with_suffix(".png"))

    if layout == "sweep":
        p_values = [p for p, _ in read_sweep_csv(csv_path).blocks]
        text = line_script(csv_path, p_values, image)
    elif layout == "grid":
        text = surface_script(csv_path, "p", "γ", image)
    else:
        text = surface_script(csv_path, "c_2", "c_3", image)

    script_path.parent.mkdir(parents=True, exist_ok=True)
    script_path.write_text(text, encoding="utf-8")
    logger.info("Wrote %s plot script %s", layout, script_path)
    return script_path
