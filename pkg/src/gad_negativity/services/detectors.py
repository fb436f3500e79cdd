"""Sudden death, frozen intervals and sudden changes on a negativity curve.

All detectors work on runs of consecutive non-gap samples, so a correlated
annihilation point splits a curve instead of poisoning it.
"""

import logging
from typing import Optional

import numpy as np

from ..config import settings
from ..models import DetectorThresholds, PhenomenonReport
from .sweep import SweepResult

logger = logging.getLogger(__name__)

# Floating slack for interval lengths and monotonicity.
LENGTH_SLACK = 1e-12
MONOTONE_SLACK = 1e-12


def _runs(result: SweepResult) -> list[tuple[np.ndarray, np.ndarray]]:
    """Maximal runs of consecutive non-gap samples as (gamma, negativity) arrays."""
    gammas = result.gammas
    values = result.negativities
    gaps = result.gaps
    runs = []
    start: Optional[int] = None
    for i, gap in enumerate(gaps):
        if gap:
            if start is not None:
                runs.append((gammas[start:i], values[start:i]))
                start = None
        elif start is None:
            start = i
    if start is not None:
        runs.append((gammas[start:], values[start:]))
    return runs


def detect_sudden_death(
    result: SweepResult, zero_tol: float = settings.ZERO_TOL
) -> Optional[float]:
    """Smallest grid gamma from which negativity stays at or below ``zero_tol``.

    Absent when the curve starts unentangled or is still entangled at its last
    sample.
    """
    mask = ~result.gaps
    gammas = result.gammas[mask]
    values = result.negativities[mask]
    if values.size == 0 or values[0] <= zero_tol or values[-1] > zero_tol:
        return None
    above = np.flatnonzero(values > zero_tol)
    return float(gammas[above[-1] + 1])


def detect_frozen_intervals(
    result: SweepResult,
    slope_eps: float = settings.SLOPE_EPS,
    min_len: float = settings.MIN_FROZEN_LEN,
    zero_tol: float = settings.ZERO_TOL,
) -> list[tuple[float, float]]:
    """Merged grid cells with |dN/dgamma| < ``slope_eps`` while entangled."""
    if len(result.samples) < 3:
        return []
    intervals: list[tuple[float, float]] = []
    for gammas, values in _runs(result):
        if gammas.size < 2:
            continue
        slopes = np.diff(values) / np.diff(gammas)
        entangled = (values[:-1] > zero_tol) & (values[1:] > zero_tol)
        flat = (np.abs(slopes) < slope_eps) & entangled
        i = 0
        while i < flat.size:
            if not flat[i]:
                i += 1
                continue
            j = i
            while j + 1 < flat.size and flat[j + 1]:
                j += 1
            lo, hi = float(gammas[i]), float(gammas[j + 1])
            if hi - lo >= min_len - LENGTH_SLACK:
                intervals.append((lo, hi))
            i = j + 1
    return intervals


def second_differences(gammas: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Curvature estimate at interior points of a possibly non-uniform grid.

    Reduces to (N[i-1] - 2 N[i] + N[i+1]) / h**2 on a uniform grid.
    """
    h1 = gammas[1:-1] - gammas[:-2]
    h2 = gammas[2:] - gammas[1:-1]
    forward = (values[2:] - values[1:-1]) / h2
    backward = (values[1:-1] - values[:-2]) / h1
    return 2.0 * (forward - backward) / (h1 + h2)


def detect_sudden_changes(
    result: SweepResult, kink_threshold: float = settings.KINK_THRESHOLD
) -> list[float]:
    """Interior grid points whose |second difference| exceeds the threshold.

    Adjacent exceedances are thinned to their local maximum; ties keep the
    leftmost point.
    """
    if len(result.samples) < 5:
        return []
    points: list[float] = []
    for gammas, values in _runs(result):
        if gammas.size < 3:
            continue
        curvature = np.abs(second_differences(gammas, values))
        for k, value in enumerate(curvature):
            if value <= kink_threshold:
                continue
            left = curvature[k - 1] if k > 0 else -np.inf
            right = curvature[k + 1] if k + 1 < curvature.size else -np.inf
            if value > left and value >= right:
                points.append(float(gammas[k + 1]))
    return points


def is_monotone_decay(result: SweepResult, zero_tol: float = settings.ZERO_TOL) -> bool:
    """Non-increasing over non-gap samples with a net drop above ``zero_tol``."""
    values = result.negativities[~result.gaps]
    if values.size < 2:
        return False
    return bool(
        np.all(np.diff(values) <= MONOTONE_SLACK) and values[0] - values[-1] > zero_tol
    )


def classify_phenomena(
    result: SweepResult, thresholds: Optional[DetectorThresholds] = None
) -> PhenomenonReport:
    """Run every detector and collect the outcome in one report."""
    thresholds = thresholds or DetectorThresholds()
    death = detect_sudden_death(result, thresholds.zero_tol)
    changes = detect_sudden_changes(result, thresholds.kink_threshold)
    frozen = detect_frozen_intervals(
        result, thresholds.slope_eps, thresholds.min_len, thresholds.zero_tol
    )
    report = PhenomenonReport(
        p=result.spec.p,
        mode=result.spec.mode,
        sudden_death_gamma=death,
        change_points=changes,
        change_count=len(changes),
        frozen_intervals=frozen,
        monotone_decay=is_monotone_decay(result, thresholds.zero_tol),
        gap_count=result.gap_count,
        thresholds=thresholds,
    )
    logger.info(
        "p=%g %s: death=%s, %d change point(s), %d frozen interval(s)",
        report.p,
        report.mode.value,
        "none" if death is None else f"{death:g}",
        report.change_count,
        len(frozen),
    )
    return report
