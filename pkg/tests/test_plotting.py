"""Tests for gnuplot script generation."""

import pytest

from gad_negativity.core.errors import ConfigError
from gad_negativity.models import BellDiagonalInitial, GammaCount, RunConfig, SurfaceSpec
from gad_negativity.services.plotting import write_plot_script
from gad_negativity.services.results import write_grid_csv, write_surface_csv, write_sweep_csv
from gad_negativity.services.sweep import initial_surface, sweep_grid


@pytest.fixture
def sweep_csv(tmp_path):
    config = RunConfig(
        initial=BellDiagonalInitial(c1=-0.5, c2=-0.5, c3=-0.5),
        p=[0.2, 0.5, 0.8],
        gamma=GammaCount(count=6),
        out=str(tmp_path / "werner.csv"),
    )
    results = sweep_grid(
        config.initial_fano(), config.p, config.gamma_grid(), config.mode, max_workers=1
    )
    return write_sweep_csv(config.out, results, config), config, results


def test_line_script_has_one_series_per_p(sweep_csv, tmp_path):
    csv_path, _, _ = sweep_csv
    script = write_plot_script(csv_path, tmp_path / "werner.gp")
    text = script.read_text(encoding="utf-8")
    for index, p in enumerate(("0.2", "0.5", "0.8")):
        assert f"index {index} using 1:2" in text
        assert f'title "p = {p}"' in text
    assert 'set xlabel "γ"' in text
    assert "set encoding utf8" in text
    assert 'set datafile separator ","' in text
    assert 'set output "' + str(tmp_path / "werner.png") + '"' in text


def test_explicit_image_name(sweep_csv, tmp_path):
    csv_path, _, _ = sweep_csv
    script = write_plot_script(csv_path, tmp_path / "out" / "w.gp", image="w.png")
    assert script.exists()
    assert 'set output "w.png"' in script.read_text(encoding="utf-8")


def test_grid_script_is_a_surface(sweep_csv, tmp_path):
    _, config, results = sweep_csv
    grid = write_grid_csv(tmp_path / "grid.csv", results, config)
    text = write_plot_script(grid, tmp_path / "grid.gp").read_text(encoding="utf-8")
    assert "pm3d" in text
    assert 'set xlabel "p"' in text
    assert "index" not in text


def test_initial_surface_script(tmp_path):
    config = RunConfig(surface=SurfaceSpec(count=5), out=str(tmp_path / "s.csv"))
    c2_axis, c3_axis = config.surface.axes()
    values = initial_surface(config.surface.c1, c2_axis, c3_axis)
    csv_path = write_surface_csv(config.out, c2_axis, c3_axis, values, config)
    text = write_plot_script(csv_path, tmp_path / "s.gp").read_text(encoding="utf-8")
    assert 'set xlabel "c_2"' in text
    assert "splot" in text


def test_missing_csv(tmp_path):
    with pytest.raises(ConfigError):
        write_plot_script(tmp_path / "absent.csv", tmp_path / "absent.gp")
    assert not (tmp_path / "absent.gp").exists()
