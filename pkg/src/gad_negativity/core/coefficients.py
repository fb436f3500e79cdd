"""Closed-form output correlations as printed, kept for diagnostic comparison.

These transcriptions are deliberately literal, suspected typos included:

* correlated B3 carries its trailing ``+ gamma (1 - p)`` as an additive term
  outside the bracketed product;
* uncorrelated B~5 has an unbalanced parenthesis, read here as
  ``sqrt(1 - gamma) * (gamma + p (1 - gamma))``;
* the ``c1 + c2`` appearing in uncorrelated B~7 and B~8 is taken to be the
  initial ``c_xx + c_yy``.

Output correlations are assembled as c1 = B2 + B3 + B7 + B8, c2 = -c1 and
c3 = (B1 + B6) - (B4 + B5) in both modes. Nothing here feeds the sweep
pipeline; the operator-sum channel is the reference.
"""

import math
from dataclasses import dataclass

from .channel import ChannelParams

TRANSCRIPTION_NOTES = (
    "correlated B3: '+gamma(1-p)' read as additive, outside the c-prefactor",
    "uncorrelated B~5: unbalanced parenthesis read as sqrt(1-gamma)*(gamma+p(1-gamma))",
    "uncorrelated B~7/B~8: 'c1+c2' read as initial c_xx+c_yy",
)


@dataclass(frozen=True)
class PrintedCoefficients:
    c1: float
    c2: float
    c3: float
    aux: dict[str, float]

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)


def _assemble(b: dict[str, float]) -> tuple[float, float, float]:
    c1 = b["B2"] + b["B3"] + b["B7"] + b["B8"]
    c3 = (b["B1"] + b["B6"]) - (b["B4"] + b["B5"])
    return c1, -c1, c3


def printed_correlated_coefficients(
    c: tuple[float, float, float], params: ChannelParams
) -> PrintedCoefficients:
    """Correlated-noise coefficients B1..B8, transcribed literally."""
    cxx, cyy, czz = c
    p, g = params.p, params.gamma
    q = p**2 + (1 - p) ** 2

    b: dict[str, float] = {}
    b["B1"] = (1 + czz) / 4 * (p**2 + (1 - p) ** 2 * (1 - g) ** 2)
    b["B2"] = (cxx - cyy) / 4 * ((1 - g) * (1 - p) ** 2 + p**2 * (2 - g))
    b["B3"] = (cxx - cyy) / 4 * (1 - g) * q + g * (1 - p)
    b["B4"] = (1 - czz) / 4 * (1 - g) * q
    b["B5"] = b["B4"]
    b["B6"] = (1 + czz) / 4 * (p**2 * (1 - g) ** 2 + (1 - p) ** 2)
    b["B7"] = (czz + cyy) / 4 * (p**2 * (1 - g) ** 2 + (1 - g) * (1 - p) ** 2)
    b["B8"] = b["B7"]

    c1, c2, c3 = _assemble(b)
    return PrintedCoefficients(c1=c1, c2=c2, c3=c3, aux=b)


def printed_uncorrelated_coefficients(
    c: tuple[float, float, float], params: ChannelParams
) -> PrintedCoefficients:
    """Uncorrelated-noise coefficients B~1..B~8, transcribed literally."""
    cxx, cyy, czz = c
    p, g = params.p, params.gamma
    root = math.sqrt(1 - g)
    minus = (cxx - cyy) / 4
    plus = (cxx + cyy) / 4

    b: dict[str, float] = {}
    b["B1"] = (1 + czz) / 4 * (p + (1 - p) * (1 - g)) ** 2
    b["B2"] = (1 - czz) / 4 * (
        (1 - g) * (p**2 + (1 - p) ** 2) + p * (1 - p) * (1 + (1 - g) ** 2)
    )
    b["B3"] = b["B2"]
    b["B4"] = (1 + czz) / 4 * (
        p**2 * (1 - g) ** 2 + (1 - p) ** 2 + p * (1 - p) * (1 - g)
    ) + minus * g**2 * (1 - p) ** 2
    b["B5"] = minus * root * (g + p * (1 - g)) + plus * (1 - g) * (
        (2 * p - 1) + p * (1 - p) * (2 + g)
    )
    b["B6"] = minus * root * (p**2 + g * (1 - p) ** 2 + p * (1 - p) * (1 + g)) + plus * (
        (1 - g) + g * p * (1 - p)
    )
    b["B7"] = minus * (1 - g) * (1 + p**2) + (cxx + cyy) / 2 * p * root
    b["B8"] = minus * (1 - g) * (p**2 + p - 1) + (cxx + cyy) / 2 * g * root * (1 - p)

    c1, c2, c3 = _assemble(b)
    return PrintedCoefficients(c1=c1, c2=c2, c3=c3, aux=b)
