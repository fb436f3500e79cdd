"""Operator-sum outputs against the printed closed-form coefficients."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..core.channel import ChannelParams, NoiseMode, apply_gad
from ..core.coefficients import (
    PrintedCoefficients,
    printed_correlated_coefficients,
    printed_uncorrelated_coefficients,
)
from ..core.errors import ChannelAnnihilationError
from ..core.state import TwoQubitFano, density_to_fano, fano_to_density, make_bell_diagonal

logger = logging.getLogger(__name__)

DEVIATION_WARN = 1e-6

_NAN3 = (math.nan, math.nan, math.nan)


@dataclass(frozen=True)
class FormulaComparison:
    """One (p, gamma) point: oracle correlations versus the printed formulas.

    ``closure_defect`` is the largest Bloch or off-diagonal correlation
    component of the oracle output; it is zero exactly when the output stays
    Bell-diagonal.
    """

    p: float
    gamma: float
    mode: NoiseMode
    oracle: tuple[float, float, float]
    printed: tuple[float, float, float]
    deviation: float
    closure_defect: float
    s_z: float
    t_z: float


def printed_coefficients(
    c: tuple[float, float, float], params: ChannelParams, mode: NoiseMode
) -> PrintedCoefficients:
    if mode is NoiseMode.CORRELATED:
        return printed_correlated_coefficients(c, params)
    return printed_uncorrelated_coefficients(c, params)


def _closure_defect(fano: TwoQubitFano) -> float:
    off = fano.C - np.diag(np.diag(fano.C))
    return float(max(np.max(np.abs(fano.s)), np.max(np.abs(fano.t)), np.max(np.abs(off))))


def compare_point(
    c: tuple[float, float, float], params: ChannelParams, mode: NoiseMode
) -> FormulaComparison:
    """Compare at one point; annihilated correlated outputs give nan fields."""
    printed = printed_coefficients(c, params, mode).triple
    rho = fano_to_density(make_bell_diagonal(*c))
    try:
        out = density_to_fano(apply_gad(rho, params, mode, check_input=False))
    except ChannelAnnihilationError:
        return FormulaComparison(
            p=params.p,
            gamma=params.gamma,
            mode=mode,
            oracle=_NAN3,
            printed=printed,
            deviation=math.nan,
            closure_defect=math.nan,
            s_z=math.nan,
            t_z=math.nan,
        )
    oracle = out.correlations
    deviation = max(abs(a - b) for a, b in zip(oracle, printed))
    return FormulaComparison(
        p=params.p,
        gamma=params.gamma,
        mode=mode,
        oracle=oracle,
        printed=printed,
        deviation=deviation,
        closure_defect=_closure_defect(out),
        s_z=float(out.s[2]),
        t_z=float(out.t[2]),
    )


def formula_census(
    c: tuple[float, float, float],
    p_grid: "list[float] | np.ndarray",
    gamma_grid: "list[float] | np.ndarray",
    mode: NoiseMode,
) -> list[FormulaComparison]:
    """Row-major comparison over a (p, gamma) grid, every point logged at DEBUG."""
    rows: list[FormulaComparison] = []
    for p in p_grid:
        for gamma in gamma_grid:
            row = compare_point(c, ChannelParams(float(p), float(gamma)), mode)
            logger.debug(
                "formula %s p=%.4f gamma=%.4f oracle=%s printed=%s dev=%.3e closure=%.3e",
                mode.value,
                row.p,
                row.gamma,
                row.oracle,
                row.printed,
                row.deviation,
                row.closure_defect,
            )
            rows.append(row)
    finite = [row.deviation for row in rows if not math.isnan(row.deviation)]
    worst = max(finite, default=0.0)
    if worst > DEVIATION_WARN:
        logger.warning(
            "printed %s coefficients deviate from the operator sum by up to %.3e "
            "(%d of %d points above %.0e)",
            mode.value,
            worst,
            sum(1 for d in finite if d > DEVIATION_WARN),
            len(rows),
            DEVIATION_WARN,
        )
    return rows
