"""Cyclic Jacobi diagonalization for small Hermitian matrices."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError, NonHermitianError

logger = logging.getLogger(__name__)

DEFAULT_OFF_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Eigendecomposition:
    """Ascending eigenvalues with matching eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int
    max_residual: float


def hermiticity_defect(m: np.ndarray) -> float:
    """Max |m_ij - conj(m_ji)|."""
    return float(np.max(np.abs(m - m.conj().T)))


def off_diagonal_norm(m: np.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    off = m - np.diag(np.diag(m))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] in place with a complex Givens rotation.

    The phase of a[p, q] is absorbed into column q first, which reduces the
    2x2 (p, q) block to a real symmetric one; the real rotation angle then
    follows the classic atan2 form.
    """
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    theta = 0.5 * math.atan2(2.0 * r, (a[q, q] - a[p, p]).real)
    c = math.cos(theta)
    s = math.sin(theta)
    sq = s * phase.conjugate()

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - sq * col_q
    a[:, q] = s * col_p + c * phase.conjugate() * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * row_p + c * phase * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - sq * vec_q
    v[:, q] = s * vec_p + c * phase.conjugate() * vec_q


def jacobi_eigh(
    m: np.ndarray,
    tol: float = DEFAULT_OFF_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    hermitian_tol: float = 1e-9,
) -> Eigendecomposition:
    """Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.

    Convergence is declared once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||m||_F)``. Every returned eigenpair satisfies
    ``||m v - lambda v|| < 1e-9``.

    Raises:
        NonHermitianError: if the hermiticity defect exceeds ``hermitian_tol``.
        EigensolverError: if ``max_sweeps`` is exhausted or the residual check
            fails.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonHermitianError(f"expected a square matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if defect > hermitian_tol:
        raise NonHermitianError(
            f"hermiticity defect {defect:.3e} exceeds tolerance {hermitian_tol:.1e}"
        )

    n = m.shape[0]
    h = 0.5 * (m + m.conj().T)
    a = h.copy()
    v = np.eye(n, dtype=np.complex128)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    while off_diagonal_norm(a) >= threshold:
        if sweeps >= max_sweeps:
            raise EigensolverError(
                f"Jacobi iteration did not converge within {max_sweeps} sweeps "
                f"(off-diagonal norm {off_diagonal_norm(a):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1

    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = v[:, order]

    residual = np.linalg.norm(h @ vectors - vectors * values, axis=0)
    max_residual = float(np.max(residual)) if residual.size else 0.0
    if max_residual >= RESIDUAL_TOL:
        raise EigensolverError(f"eigenpair residual {max_residual:.3e} too large")

    logger.debug("Jacobi converged in %d sweeps (residual %.2e)", sweeps, max_residual)
    return Eigendecomposition(
        values=values, vectors=vectors, sweeps=sweeps, max_residual=max_residual
    )
