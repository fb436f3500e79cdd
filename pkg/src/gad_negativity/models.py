"""Pydantic models for run configuration and reports."""

from enum import Enum
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .config import settings
from .core.channel import NoiseMode, gamma_of_time
from .core.errors import NonPhysicalStateError
from .core.state import (
    TwoQubitFano,
    fano_to_density,
    make_bell_diagonal,
    make_werner,
    validate_density,
)

__all__ = [
    "BellDiagonalInitial",
    "CheckResult",
    "DetectorThresholds",
    "FanoInitial",
    "GammaCount",
    "GammaGrid",
    "GammaTime",
    "GammaValues",
    "InitialState",
    "ModeCensus",
    "NoiseMode",
    "PhenomenonReport",
    "RunConfig",
    "SurfaceSpec",
    "VerificationLevel",
    "VerificationReport",
    "WernerInitial",
]


class StrictModel(BaseModel):
    """Base model that rejects unknown keys."""

    model_config = ConfigDict(extra="forbid")


class VerificationLevel(str, Enum):
    """Size of the verification suite."""

    FAST = "fast"
    FULL = "full"


class DetectorThresholds(StrictModel):
    """Thresholds shared by the phenomenon detectors."""

    zero_tol: float = Field(default=settings.ZERO_TOL, gt=0)
    slope_eps: float = Field(default=settings.SLOPE_EPS, gt=0)
    min_len: float = Field(default=settings.MIN_FROZEN_LEN, gt=0)
    kink_threshold: float = Field(default=settings.KINK_THRESHOLD, gt=0)


# Initial states


class BellDiagonalInitial(StrictModel):
    kind: Literal["bell_diagonal"] = "bell_diagonal"
    c1: float
    c2: float
    c3: float

    @model_validator(mode="after")
    def _check_physical(self) -> "BellDiagonalInitial":
        self.to_fano()
        return self

    def to_fano(self) -> TwoQubitFano:
        return make_bell_diagonal(self.c1, self.c2, self.c3, tol=settings.PHYSICALITY_TOL)

    def label(self) -> str:
        return f"bell_diagonal({self.c1:g},{self.c2:g},{self.c3:g})"


class WernerInitial(StrictModel):
    kind: Literal["werner"] = "werner"
    x: float

    @model_validator(mode="after")
    def _check_window(self) -> "WernerInitial":
        self.to_fano()
        return self

    def to_fano(self) -> TwoQubitFano:
        return make_werner(self.x, tol=settings.PHYSICALITY_TOL)

    def label(self) -> str:
        return f"werner({self.x:g})"


class FanoInitial(StrictModel):
    """Explicit Bloch vectors and correlation dyadic."""

    kind: Literal["fano"] = "fano"
    s: list[float] = Field(default_factory=lambda: [0.0, 0.0, 0.0], min_length=3, max_length=3)
    t: list[float] = Field(default_factory=lambda: [0.0, 0.0, 0.0], min_length=3, max_length=3)
    C: list[list[float]] = Field(default_factory=lambda: [[0.0] * 3 for _ in range(3)])

    @model_validator(mode="after")
    def _check_physical(self) -> "FanoInitial":
        report = validate_density(fano_to_density(self.to_fano()), settings.PHYSICALITY_TOL)
        if not report.physical:
            raise NonPhysicalStateError(
                f"Fano parameters give a non-physical state "
                f"(min eigenvalue {report.min_eigenvalue:.3g})"
            )
        return self

    def to_fano(self) -> TwoQubitFano:
        return TwoQubitFano(s=np.array(self.s), t=np.array(self.t), C=np.array(self.C))

    def label(self) -> str:
        return "fano"


InitialState = Annotated[
    Union[BellDiagonalInitial, WernerInitial, FanoInitial],
    Field(discriminator="kind"),
]


# Gamma grids


class GammaCount(StrictModel):
    """``count`` uniform points on [0, 1], endpoints included."""

    kind: Literal["count"] = "count"
    count: int = Field(default=settings.GAMMA_COUNT, ge=1)

    def grid(self) -> np.ndarray:
        if self.count == 1:
            return np.zeros(1)
        return np.linspace(0.0, 1.0, self.count)


class GammaValues(StrictModel):
    """An explicit list of damping values."""

    kind: Literal["values"] = "values"
    values: list[float] = Field(min_length=1)

    @field_validator("values")
    @classmethod
    def _check_values(cls, values: list[float]) -> list[float]:
        if any(not (0.0 <= v <= 1.0) for v in values):
            raise ValueError("gamma values must lie in [0, 1]")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("gamma values must be strictly increasing")
        return values

    def grid(self) -> np.ndarray:
        return np.array(self.values, dtype=float)


class GammaTime(StrictModel):
    """Damping sampled along a time axis, gamma = 1 - exp(-gamma0 t)."""

    kind: Literal["time"] = "time"
    gamma0: float = Field(gt=0)
    t_max: float = Field(gt=0)
    count: int = Field(default=settings.GAMMA_COUNT, ge=2)

    @model_validator(mode="after")
    def _check_increasing(self) -> "GammaTime":
        grid = self.grid()
        if np.any(np.diff(grid) <= 0):
            raise ValueError("time grid saturates at gamma = 1; lower t_max or gamma0")
        return self

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.count)

    def grid(self) -> np.ndarray:
        return np.array([gamma_of_time(self.gamma0, t) for t in self.times()])


GammaGrid = Annotated[
    Union[GammaCount, GammaValues, GammaTime],
    Field(discriminator="kind"),
]


class SurfaceSpec(StrictModel):
    """Initial-state negativity over (c2, c3) at fixed c1, with p = gamma = 0."""

    c1: float = -1.0
    c2_min: float = Field(default=-1.0, ge=-1.0, le=1.0)
    c2_max: float = Field(default=0.0, ge=-1.0, le=1.0)
    c3_min: float = Field(default=-1.0, ge=-1.0, le=1.0)
    c3_max: float = Field(default=0.0, ge=-1.0, le=1.0)
    count: int = Field(default=51, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "SurfaceSpec":
        if self.c2_max < self.c2_min or self.c3_max < self.c3_min:
            raise ValueError("surface ranges must satisfy min <= max")
        return self

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(self.c2_min, self.c2_max, self.count),
            np.linspace(self.c3_min, self.c3_max, self.count),
        )


class RunConfig(StrictModel):
    """Everything a sweep, grid or plot-script run needs."""

    initial: InitialState = Field(
        default_factory=lambda: BellDiagonalInitial(c1=-0.1, c2=-0.2, c3=-0.7)
    )
    mode: NoiseMode = NoiseMode.CORRELATED
    p: list[float] = Field(default_factory=lambda: [0.1, 0.2, 0.3], min_length=1)
    gamma: GammaGrid = Field(default_factory=GammaCount)
    thresholds: DetectorThresholds = Field(default_factory=DetectorThresholds)
    out: str = "negativity.csv"
    plot_out: Optional[str] = None
    compare_formulas: bool = False
    surface: Optional[SurfaceSpec] = None

    @field_validator("p")
    @classmethod
    def _check_p(cls, values: list[float]) -> list[float]:
        if any(not (0.0 <= v <= 1.0) for v in values):
            raise ValueError("p values must lie in [0, 1]")
        return values

    def initial_fano(self) -> TwoQubitFano:
        return self.initial.to_fano()

    def gamma_grid(self) -> np.ndarray:
        return self.gamma.grid()

    def resolved_plot_out(self) -> str:
        if self.plot_out:
            return self.plot_out
        stem = self.out.rsplit(".", 1)[0] if "." in self.out else self.out
        return f"{stem}.gp"


# Reports


class PhenomenonReport(BaseModel):
    """Detector output for one fixed-p sweep."""

    p: float
    mode: NoiseMode
    sudden_death_gamma: Optional[float] = None
    change_points: list[float] = Field(default_factory=list)
    change_count: int = 0
    frozen_intervals: list[tuple[float, float]] = Field(default_factory=list)
    monotone_decay: bool = False
    gap_count: int = 0
    thresholds: DetectorThresholds = Field(default_factory=DetectorThresholds)

    @property
    def change_kind(self) -> str:
        return {0: "none", 1: "single", 2: "double"}.get(self.change_count, "multiple")


class CheckResult(BaseModel):
    """Outcome of one verification property."""

    name: str
    passed: bool
    measured: float
    limit: float
    hard: bool = True
    detail: str = ""


class VerificationReport(BaseModel):
    level: VerificationLevel
    seed: int
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.hard)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if check.hard and not check.passed]


class ModeCensus(BaseModel):
    """Pointwise uncorrelated-vs-correlated comparison over a shared grid."""

    points: int
    entangled_points: int
    uncorrelated_not_larger: int

    @property
    def fraction(self) -> float:
        if self.entangled_points == 0:
            return float("nan")
        return self.uncorrelated_not_larger / self.entangled_points


def config_error_message(exc: Exception) -> str:
    """One-line description of a config validation failure."""
    errors = getattr(exc, "errors", None)
    if callable(errors):
        parts = []
        for err in errors():
            where = ".".join(str(loc) for loc in err.get("loc", ()))
            parts.append(f"{where}: {err.get('msg')}" if where else str(err.get("msg")))
        return "; ".join(parts)
    return str(exc)
