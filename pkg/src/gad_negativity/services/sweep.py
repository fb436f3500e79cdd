"""Negativity sweeps over the damping parameter and (p, gamma) grids."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import settings
from ..core.channel import ChannelParams, NoiseMode, apply_gad
from ..core.entanglement import negativity, negativity_closed_form_bell_diagonal
from ..core.errors import (
    ChannelAnnihilationError,
    NonPhysicalOutputError,
    NonPhysicalStateError,
    ParameterRangeError,
    UnphysicalParametersError,
)
from ..core.state import TwoQubitFano, fano_to_density, validate_density
from ..models import ModeCensus
from .comparison import DEVIATION_WARN, compare_point

logger = logging.getLogger(__name__)

# Slack when asserting "uncorrelated <= correlated" pointwise.
CENSUS_SLACK = 1e-12


def default_gamma_grid(count: int = settings.GAMMA_COUNT) -> np.ndarray:
    """``count`` uniform points on [0, 1], endpoints included."""
    if count < 1:
        raise ParameterRangeError("gamma grid needs at least one point")
    if count == 1:
        return np.zeros(1)
    return np.linspace(0.0, 1.0, count)


def _check_grid(grid: np.ndarray) -> None:
    if grid.ndim != 1 or grid.size == 0:
        raise ParameterRangeError("gamma grid must be a non-empty list")
    if np.any(~np.isfinite(grid)) or grid[0] < 0.0 or grid[-1] > 1.0:
        raise ParameterRangeError("gamma grid values must lie in [0, 1]")
    if np.any(np.diff(grid) <= 0):
        raise ParameterRangeError("gamma grid must be strictly increasing")


@dataclass(frozen=True, eq=False)
class SweepSpec:
    initial: TwoQubitFano
    p: float
    mode: NoiseMode
    gamma_grid: np.ndarray
    compare_formulas: bool = False

    def __post_init__(self) -> None:
        grid = np.array(self.gamma_grid, dtype=float)
        _check_grid(grid)
        ChannelParams(self.p, 0.0)
        grid.flags.writeable = False
        object.__setattr__(self, "gamma_grid", grid)
        object.__setattr__(self, "mode", NoiseMode(self.mode))


@dataclass(frozen=True)
class SweepSample:
    gamma: float
    negativity: float
    discrepancy: float = math.nan
    gap: bool = False


@dataclass(frozen=True, eq=False)
class SweepResult:
    spec: SweepSpec
    samples: tuple[SweepSample, ...]

    @property
    def gammas(self) -> np.ndarray:
        return np.array([s.gamma for s in self.samples])

    @property
    def negativities(self) -> np.ndarray:
        return np.array([s.negativity for s in self.samples])

    @property
    def gaps(self) -> np.ndarray:
        return np.array([s.gap for s in self.samples], dtype=bool)

    @property
    def gap_count(self) -> int:
        return sum(1 for s in self.samples if s.gap)

    @property
    def max_discrepancy(self) -> float:
        finite = [s.discrepancy for s in self.samples if not math.isnan(s.discrepancy)]
        return max(finite, default=math.nan)


def sweep_gamma(spec: SweepSpec, tol: float = settings.PHYSICALITY_TOL) -> SweepResult:
    """Clamped negativity of the channel output at every grid point.

    Correlated annihilation becomes a gap sample (negativity nan). Every other
    output must pass ``validate_density`` at ``tol``.

    Raises:
        NonPhysicalStateError: if the initial state is not physical.
        NonPhysicalOutputError: if a channel output fails validation.
    """
    rho = fano_to_density(spec.initial)
    report = validate_density(rho, tol)
    if not report.physical:
        raise NonPhysicalStateError(
            f"initial state is not physical (min eigenvalue {report.min_eigenvalue:.3e})"
        )

    compare = spec.compare_formulas and spec.initial.is_bell_diagonal
    if spec.compare_formulas and not compare:
        logger.warning("formula comparison needs a Bell-diagonal initial state; skipped")

    logger.info(
        "Sweeping %d gamma points (mode=%s, p=%g)", len(spec.gamma_grid), spec.mode.value, spec.p
    )
    samples: list[SweepSample] = []
    for gamma in spec.gamma_grid:
        params = ChannelParams(spec.p, float(gamma))
        discrepancy = (
            compare_point(spec.initial.correlations, params, spec.mode).deviation
            if compare
            else math.nan
        )
        try:
            out = apply_gad(rho, params, spec.mode, check_input=False)
        except ChannelAnnihilationError as exc:
            logger.warning("gap sample: %s", exc)
            samples.append(SweepSample(float(gamma), math.nan, discrepancy, gap=True))
            continue
        out_report = validate_density(out, tol)
        if not out_report.physical:
            raise NonPhysicalOutputError(
                f"channel output at p={spec.p}, gamma={gamma} failed validation "
                f"(trace defect {out_report.trace_defect:.2e}, "
                f"min eigenvalue {out_report.min_eigenvalue:.2e})"
            )
        value = negativity(out, tol).clamped
        samples.append(SweepSample(float(gamma), value, discrepancy))

    result = SweepResult(spec=spec, samples=tuple(samples))
    if compare and result.max_discrepancy > DEVIATION_WARN:
        logger.warning(
            "printed %s coefficients deviate from the operator sum by up to %.3e at p=%g "
            "(%d of %d points above %.0e)",
            spec.mode.value,
            result.max_discrepancy,
            spec.p,
            sum(1 for s in samples if s.discrepancy > DEVIATION_WARN),
            len(samples),
            DEVIATION_WARN,
        )
    logger.info(
        "Sweep done (p=%g): %d samples, %d gaps", spec.p, len(samples), result.gap_count
    )
    return result


def sweep_grid(
    initial: TwoQubitFano,
    p_grid: "list[float] | np.ndarray",
    gamma_grid: "list[float] | np.ndarray",
    mode: NoiseMode,
    *,
    compare_formulas: bool = False,
    max_workers: Optional[int] = None,
) -> list[SweepResult]:
    """One sweep per p, returned in ``p_grid`` order.

    Rows run in a process pool when more than one worker is allowed; results
    are collected in input order either way.
    """
    specs = [
        SweepSpec(
            initial=initial,
            p=float(p),
            mode=mode,
            gamma_grid=np.asarray(gamma_grid, dtype=float),
            compare_formulas=compare_formulas,
        )
        for p in p_grid
    ]
    if not specs:
        raise ParameterRangeError("p grid must be non-empty")
    workers = min(max_workers or settings.MAX_WORKERS, len(specs))
    logger.info(
        "Grid: %d p rows x %d gamma points, %d worker(s)",
        len(specs),
        len(specs[0].gamma_grid),
        workers,
    )
    if workers <= 1:
        return [sweep_gamma(spec) for spec in specs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(sweep_gamma, specs))


def compare_noise_modes(
    initial: TwoQubitFano,
    p_grid: "list[float] | np.ndarray",
    gamma_grid: "list[float] | np.ndarray",
    zero_tol: float = settings.ZERO_TOL,
    *,
    max_workers: Optional[int] = None,
) -> ModeCensus:
    """Count grid points where uncorrelated negativity does not exceed correlated.

    Only points where either negativity exceeds ``zero_tol`` (and neither is a
    gap) enter the census.
    """
    correlated = sweep_grid(
        initial, p_grid, gamma_grid, NoiseMode.CORRELATED, max_workers=max_workers
    )
    uncorrelated = sweep_grid(
        initial, p_grid, gamma_grid, NoiseMode.UNCORRELATED, max_workers=max_workers
    )
    return census_from_results(correlated, uncorrelated, zero_tol)


def census_from_results(
    correlated: list[SweepResult],
    uncorrelated: list[SweepResult],
    zero_tol: float = settings.ZERO_TOL,
) -> ModeCensus:
    """Mode census over sweeps already computed on the same (p, gamma) grid.

    Raises:
        ParameterRangeError: if the two sides do not share their grids.
    """
    if len(correlated) != len(uncorrelated) or any(
        c.spec.p != u.spec.p or not np.array_equal(c.gammas, u.gammas)
        for c, u in zip(correlated, uncorrelated)
    ):
        raise ParameterRangeError("mode census needs both modes on the same (p, gamma) grid")
    points = entangled = not_larger = 0
    for row_c, row_u in zip(correlated, uncorrelated):
        for sc, su in zip(row_c.samples, row_u.samples):
            points += 1
            if sc.gap or su.gap:
                continue
            if sc.negativity <= zero_tol and su.negativity <= zero_tol:
                continue
            entangled += 1
            ok = su.negativity <= sc.negativity + CENSUS_SLACK
            not_larger += ok
            logger.debug(
                "census p=%g gamma=%g corr=%.6g uncorr=%.6g %s",
                row_c.spec.p,
                sc.gamma,
                sc.negativity,
                su.negativity,
                "ok" if ok else "exceeds",
            )
    census = ModeCensus(
        points=points, entangled_points=entangled, uncorrelated_not_larger=not_larger
    )
    logger.info(
        "Mode census: %d/%d entangled points have uncorrelated <= correlated",
        not_larger,
        entangled,
    )
    return census


def initial_surface(
    c1: float, c2_axis: np.ndarray, c3_axis: np.ndarray
) -> np.ndarray:
    """Negativity of Bell-diagonal initial states over (c2, c3); nan where unphysical.

    With p = gamma = 0 the channel is the identity, so the closed form suffices.
    """
    values = np.full((len(c2_axis), len(c3_axis)), np.nan)
    for i, c2 in enumerate(c2_axis):
        for j, c3 in enumerate(c3_axis):
            try:
                values[i, j] = negativity_closed_form_bell_diagonal(
                    c1, float(c2), float(c3)
                ).clamped
            except UnphysicalParametersError:
                continue
    physical = int(np.sum(~np.isnan(values)))
    logger.info("Initial surface: %d of %d points physical", physical, values.size)
    return values
