"""Named run configurations for the published figures."""

from dataclasses import dataclass
from typing import Any

from .core.channel import NoiseMode
from .core.errors import ConfigError
from .models import (
    BellDiagonalInitial,
    GammaCount,
    RunConfig,
    SurfaceSpec,
    WernerInitial,
)

DIAG_STATE = BellDiagonalInitial(c1=-0.1, c2=-0.2, c3=-0.7)
WERNER_STATE = WernerInitial(x=-0.03)
SINGLET_STATE = BellDiagonalInitial(c1=-1.0, c2=-1.0, c3=-1.0)
X_STATE = BellDiagonalInitial(c1=-0.1, c2=-0.2, c3=-0.3)

LOW_P = [0.1, 0.2, 0.3]
WERNER_LOW_P = [0.01, 0.1, 0.2]
WERNER_HIGH_P = [0.7, 0.8, 0.9]
SURFACE_AXIS = [round(k / 50, 10) for k in range(51)]


@dataclass(frozen=True)
class Preset:
    name: str
    command: str
    description: str
    config: RunConfig


def _sweep(name: str, description: str, **fields: Any) -> Preset:
    return Preset(name, "sweep", description, RunConfig(out=f"{name}.csv", **fields))


def _grid(name: str, description: str, **fields: Any) -> Preset:
    return Preset(name, "grid", description, RunConfig(out=f"{name}.csv", **fields))


PRESETS: dict[str, Preset] = {
    preset.name: preset
    for preset in (
        _grid(
            "fig1",
            "initial negativity over c2, c3 in [-1, 0] at c1 = -1",
            initial=SINGLET_STATE,
            p=[0.0],
            surface=SurfaceSpec(),
        ),
        _grid(
            "fig2a",
            "correlated noise, C = diag(-0.1, -0.2, -0.7), (p, gamma) surface",
            initial=DIAG_STATE,
            p=SURFACE_AXIS,
            gamma=GammaCount(count=51),
        ),
        _sweep(
            "fig2b",
            "correlated noise, C = diag(-0.1, -0.2, -0.7), p = 0.1, 0.2, 0.3",
            initial=DIAG_STATE,
            p=LOW_P,
        ),
        _sweep(
            "fig3a",
            "correlated noise, Werner x = -0.03, small p",
            initial=WERNER_STATE,
            p=WERNER_LOW_P,
        ),
        _sweep(
            "fig3b",
            "correlated noise, Werner x = -0.03, large p",
            initial=WERNER_STATE,
            p=WERNER_HIGH_P,
        ),
        _sweep(
            "fig4a",
            "correlated noise, singlet",
            initial=SINGLET_STATE,
            p=LOW_P,
        ),
        _sweep(
            "fig4b",
            "correlated noise, X state C = diag(-0.1, -0.2, -0.3)",
            initial=X_STATE,
            p=LOW_P,
        ),
        _grid(
            "fig5a",
            "uncorrelated noise, C = diag(-0.1, -0.2, -0.7), (p, gamma) surface",
            initial=DIAG_STATE,
            mode=NoiseMode.UNCORRELATED,
            p=SURFACE_AXIS,
            gamma=GammaCount(count=51),
        ),
        _sweep(
            "fig5b",
            "uncorrelated noise, C = diag(-0.1, -0.2, -0.7), p = 0.1, 0.2, 0.3",
            initial=DIAG_STATE,
            mode=NoiseMode.UNCORRELATED,
            p=LOW_P,
        ),
        _sweep(
            "fig6a",
            "uncorrelated noise, Werner x = -0.03, small p",
            initial=WERNER_STATE,
            mode=NoiseMode.UNCORRELATED,
            p=WERNER_LOW_P,
        ),
        _sweep(
            "fig6b",
            "uncorrelated noise, Werner x = -0.03, large p",
            initial=WERNER_STATE,
            mode=NoiseMode.UNCORRELATED,
            p=WERNER_HIGH_P,
        ),
    )
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown preset {name!r} (known: {known})") from None
