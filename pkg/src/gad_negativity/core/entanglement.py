"""Partial transpose, Hermitian spectra and negativity."""

from dataclasses import dataclass

import numpy as np

from .errors import NonHermitianError
from .linalg import DEFAULT_MAX_SWEEPS, DEFAULT_OFF_TOL, hermiticity_defect, jacobi_eigh
from .state import DEFAULT_TOL, DensityMatrix4, bell_basis_eigenvalues, make_bell_diagonal


@dataclass(frozen=True)
class Spectrum4:
    values: tuple[float, float, float, float]

    @property
    def total(self) -> float:
        return float(sum(self.values))


@dataclass(frozen=True)
class NegativityValue:
    raw: float
    clamped: float

    @classmethod
    def from_spectrum(cls, values: "tuple[float, ...] | np.ndarray") -> "NegativityValue":
        raw = float(np.sum(np.abs(values))) - 1.0
        return cls(raw=raw, clamped=max(0.0, raw))


def partial_transpose_second(
    rho: "DensityMatrix4 | np.ndarray", tol: float = DEFAULT_TOL
) -> np.ndarray:
    """Transpose the second qubit: entry (2a+b, 2c+d) moves to (2a+d, 2c+b).

    Raises:
        NonHermitianError: if the input hermiticity defect exceeds ``tol``.
    """
    m = rho.m if isinstance(rho, DensityMatrix4) else np.asarray(rho, dtype=np.complex128)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NonHermitianError(f"hermiticity defect {defect:.3e} exceeds {tol:.1e}")
    # Index as [a, b, c, d] and swap the second-qubit indices b <-> d.
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4).copy()


def hermitian_eigenvalues(
    m: np.ndarray,
    tol: float = DEFAULT_TOL,
    off_tol: float = DEFAULT_OFF_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum4:
    """Ascending eigenvalues of a 4x4 Hermitian matrix (cyclic Jacobi)."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (4, 4):
        raise NonHermitianError(f"expected a 4x4 matrix, got shape {m.shape}")
    values = jacobi_eigh(m, tol=off_tol, max_sweeps=max_sweeps, hermitian_tol=tol).values
    a, b, c, d = (float(v) for v in values)
    return Spectrum4(values=(a, b, c, d))


def negativity(rho: DensityMatrix4, tol: float = DEFAULT_TOL) -> NegativityValue:
    """Sum of |eigenvalues| of the partial transpose, minus one."""
    spectrum = hermitian_eigenvalues(partial_transpose_second(rho, tol), tol)
    return NegativityValue.from_spectrum(spectrum.values)


def partial_transpose_bell_spectrum(c1: float, c2: float, c3: float) -> tuple[float, ...]:
    """Spectrum of the partial transpose of C = diag(c1, c2, c3).

    Transposition negates sigma_y, so this is the Bell-basis spectrum with
    c2 -> -c2.
    """
    return bell_basis_eigenvalues(c1, -c2, c3)


def negativity_closed_form_bell_diagonal(
    c1: float, c2: float, c3: float, tol: float = DEFAULT_TOL
) -> NegativityValue:
    """Negativity of a Bell-diagonal state without diagonalization.

    Raises:
        UnphysicalParametersError: for parameters rejected by make_bell_diagonal.
    """
    make_bell_diagonal(c1, c2, c3, tol=tol)
    return NegativityValue.from_spectrum(partial_transpose_bell_spectrum(c1, c2, c3))


def negativity_printed_closed_form(C: np.ndarray) -> float:
    """The printed correlation-matrix formula -1/2 + 1/2 tr(C^T C); diagnostic only."""
    c = np.asarray(C, dtype=float)
    return -0.5 + 0.5 * float(np.trace(c.T @ c))


def negativity_werner_closed_form(x: float) -> float:
    """The printed Werner-state line -1/2 + 3|x|/2."""
    return -0.5 + 1.5 * abs(x)
