"""Tests for result CSV writing and reading."""

import math

import numpy as np
import pytest

from gad_negativity.core.errors import ConfigError
from gad_negativity.models import BellDiagonalInitial, GammaCount, RunConfig, SurfaceSpec
from gad_negativity.services.detectors import classify_phenomena
from gad_negativity.services.results import (
    detect_layout,
    read_config_echo,
    read_grid_csv,
    read_sweep_csv,
    write_grid_csv,
    write_surface_csv,
    write_sweep_csv,
)
from gad_negativity.services.sweep import initial_surface, sweep_grid


def same_float(a, b):
    return (math.isnan(a) and math.isnan(b)) or a == b


@pytest.fixture
def singlet_config(tmp_path):
    return RunConfig(
        initial=BellDiagonalInitial(c1=-1.0, c2=-1.0, c3=-1.0),
        p=[0.1, 0.5],
        gamma=GammaCount(count=11),
        compare_formulas=True,
        out=str(tmp_path / "sweep.csv"),
    )


@pytest.fixture
def singlet_results(singlet_config):
    return sweep_grid(
        singlet_config.initial_fano(),
        singlet_config.p,
        singlet_config.gamma_grid(),
        singlet_config.mode,
        compare_formulas=True,
        max_workers=1,
    )


def test_sweep_round_trip_is_exact(singlet_config, singlet_results):
    reports = [classify_phenomena(r) for r in singlet_results]
    path = write_sweep_csv(singlet_config.out, singlet_results, singlet_config, reports)
    table = read_sweep_csv(path)

    assert table.columns == ("gamma", "negativity", "discrepancy")
    assert [p for p, _ in table.blocks] == [0.1, 0.5]
    for result in singlet_results:
        read_back = table.samples_for(result.spec.p)
        assert len(read_back) == len(result.samples)
        for written, read in zip(result.samples, read_back):
            assert written.gamma == read.gamma
            assert same_float(written.negativity, read.negativity)
            assert same_float(written.discrepancy, read.discrepancy)
            assert written.gap == read.gap


def test_sweep_gap_survives_round_trip(singlet_config, singlet_results):
    path = write_sweep_csv(singlet_config.out, singlet_results, singlet_config)
    last = read_sweep_csv(path).samples_for(0.1)[-1]
    assert last.gamma == 1.0
    assert last.gap
    assert math.isnan(last.negativity)


def test_sweep_footer_and_config_echo(singlet_config, singlet_results):
    path = write_sweep_csv(singlet_config.out, singlet_results, singlet_config)
    table = read_sweep_csv(path)
    expected = max(r.max_discrepancy for r in singlet_results)
    assert table.max_discrepancy == pytest.approx(expected, nan_ok=True)
    assert table.config == singlet_config
    assert read_config_echo(path) == singlet_config


def test_sweep_reports_in_header(singlet_config, singlet_results):
    reports = [classify_phenomena(r) for r in singlet_results]
    path = write_sweep_csv(singlet_config.out, singlet_results, singlet_config, reports)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# gad-negativity sweep"
    assert sum(line.startswith("# report = ") for line in lines) == 2
    assert any(line.startswith("# thresholds: zero_tol=1e-06") for line in lines)


def test_sweep_without_comparison_has_two_columns(tmp_path, singlet_results):
    config = RunConfig(
        initial=BellDiagonalInitial(c1=-1.0, c2=-1.0, c3=-1.0),
        gamma=GammaCount(count=11),
        out=str(tmp_path / "plain.csv"),
    )
    path = write_sweep_csv(config.out, singlet_results, config)
    table = read_sweep_csv(path)
    assert table.columns == ("gamma", "negativity")
    assert table.max_discrepancy is None
    assert all(math.isnan(s.discrepancy) for s in table.samples_for(0.5))


def test_blocks_are_separated_by_two_blank_lines(singlet_config, singlet_results):
    path = write_sweep_csv(singlet_config.out, singlet_results, singlet_config)
    text = path.read_text(encoding="utf-8")
    assert "\n\n\n# p = 0.5\n" in text


def test_grid_rows(tmp_path, singlet_config, singlet_results):
    path = write_grid_csv(tmp_path / "grid.csv", singlet_results, singlet_config)
    rows = read_grid_csv(path)
    assert len(rows) == 2 * 11
    assert rows[0][:2] == (0.1, 0.0)
    assert rows[0][2] == pytest.approx(1.0)
    assert rows[11][0] == 0.5
    assert detect_layout(path) == "grid"
    assert read_config_echo(path) == singlet_config


def test_surface_rows(tmp_path):
    config = RunConfig(surface=SurfaceSpec(count=3), out=str(tmp_path / "surface.csv"))
    c2_axis, c3_axis = config.surface.axes()
    values = initial_surface(config.surface.c1, c2_axis, c3_axis)
    path = write_surface_csv(config.out, c2_axis, c3_axis, values, config)

    rows = read_grid_csv(path)
    assert len(rows) == 9
    assert detect_layout(path) == "surface"
    for c2, c3, value in rows:
        i = int(np.argmin(np.abs(c2_axis - c2)))
        j = int(np.argmin(np.abs(c3_axis - c3)))
        assert same_float(value, float(values[i, j]))
    # c1 = c2 = c3 = -1 is the singlet
    assert rows[0] == (-1.0, -1.0, pytest.approx(1.0))


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError):
        read_sweep_csv(tmp_path / "absent.csv")
    with pytest.raises(ConfigError):
        detect_layout(tmp_path / "absent.csv")


def test_foreign_file_layout(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        detect_layout(path)
    assert read_config_echo(path) is None
