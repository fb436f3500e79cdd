"""Two-qubit states in Fano form and as 4x4 density matrices.

Basis order is |00>, |01>, |10>, |11> with sigma_z|0> = +|0>. The Fano form is

    rho = 1/4 (I + sum_i s_i sigma_i x I + sum_i t_i I x sigma_i
               + sum_kl c_kl sigma_k x sigma_l)
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidStateError, NonHermitianError, UnphysicalParametersError
from .linalg import hermiticity_defect, jacobi_eigh

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
# Slack on the [-1, 1] component bound for parameters read back from matrices.
COMPONENT_SLACK = 1e-9

IDENTITY2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

SIGMA_LOCAL_A = tuple(np.kron(sigma, IDENTITY2) for sigma in PAULIS)
SIGMA_LOCAL_B = tuple(np.kron(IDENTITY2, sigma) for sigma in PAULIS)
SIGMA_PAIRS = tuple(tuple(np.kron(sk, sl) for sl in PAULIS) for sk in PAULIS)

for _op in (*SIGMA_LOCAL_A, *SIGMA_LOCAL_B, *(op for row in SIGMA_PAIRS for op in row)):
    _op.flags.writeable = False


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class TwoQubitFano:
    """Bloch vectors ``s``, ``t`` and correlation dyadic ``C`` of a two-qubit state."""

    s: np.ndarray = field(default_factory=lambda: np.zeros(3))
    t: np.ndarray = field(default_factory=lambda: np.zeros(3))
    C: np.ndarray = field(default_factory=lambda: np.zeros((3, 3)))

    def __post_init__(self) -> None:
        s = np.asarray(self.s, dtype=float)
        t = np.asarray(self.t, dtype=float)
        c = np.asarray(self.C, dtype=float)
        if s.shape != (3,) or t.shape != (3,) or c.shape != (3, 3):
            raise InvalidStateError(
                f"expected s, t of shape (3,) and C of shape (3, 3), "
                f"got {s.shape}, {t.shape}, {c.shape}"
            )
        for name, values in (("s", s), ("t", t), ("C", c)):
            if not np.all(np.isfinite(values)):
                raise InvalidStateError(f"{name} has non-finite components")
            if np.max(np.abs(values)) > 1.0 + COMPONENT_SLACK:
                raise InvalidStateError(f"{name} has components outside [-1, 1]")
        object.__setattr__(self, "s", _frozen(s))
        object.__setattr__(self, "t", _frozen(t))
        object.__setattr__(self, "C", _frozen(c))

    @property
    def is_bell_diagonal(self) -> bool:
        return (
            not np.any(self.s)
            and not np.any(self.t)
            and not np.any(self.C - np.diag(np.diag(self.C)))
        )

    @property
    def correlations(self) -> tuple[float, float, float]:
        """Diagonal of ``C`` as (c1, c2, c3)."""
        c1, c2, c3 = np.diag(self.C)
        return float(c1), float(c2), float(c3)

    def max_deviation(self, other: "TwoQubitFano") -> float:
        return float(
            max(
                np.max(np.abs(self.s - other.s)),
                np.max(np.abs(self.t - other.t)),
                np.max(np.abs(self.C - other.C)),
            )
        )


@dataclass(frozen=True, eq=False)
class DensityMatrix4:
    """A 4x4 complex density matrix in the |00>,|01>,|10>,|11> basis."""

    m: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.m, dtype=np.complex128)
        if m.shape != (4, 4):
            raise InvalidStateError(f"expected a 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidStateError("density matrix has non-finite entries")
        object.__setattr__(self, "m", _frozen(m))

    @property
    def trace(self) -> float:
        return float(np.trace(self.m).real)

    def max_deviation(self, other: "DensityMatrix4") -> float:
        return float(np.max(np.abs(self.m - other.m)))


@dataclass(frozen=True)
class ValidationReport:
    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float
    physical: bool


def fano_to_density(state: TwoQubitFano) -> DensityMatrix4:
    """Assemble the density matrix of a Fano-parametrized state."""
    m = np.eye(4, dtype=np.complex128)
    for i in range(3):
        m = m + state.s[i] * SIGMA_LOCAL_A[i] + state.t[i] * SIGMA_LOCAL_B[i]
        for j in range(3):
            m = m + state.C[i, j] * SIGMA_PAIRS[i][j]
    m = 0.25 * m
    # Exact Hermiticity: both triangles come from the same floating sums.
    m = 0.5 * (m + m.conj().T)
    return DensityMatrix4(m)


def density_to_fano(rho: DensityMatrix4, tol: float = DEFAULT_TOL) -> TwoQubitFano:
    """Read Bloch vectors and correlations back as Pauli expectation values.

    Raises:
        NonHermitianError: if the hermiticity defect of ``rho`` exceeds ``tol``.
    """
    defect = hermiticity_defect(rho.m)
    if defect > tol:
        raise NonHermitianError(f"hermiticity defect {defect:.3e} exceeds {tol:.1e}")

    def expect(op: np.ndarray) -> float:
        return float(np.trace(rho.m @ op).real)

    s = [expect(op) for op in SIGMA_LOCAL_A]
    t = [expect(op) for op in SIGMA_LOCAL_B]
    c = [[expect(op) for op in row] for row in SIGMA_PAIRS]
    return TwoQubitFano(s=np.array(s), t=np.array(t), C=np.array(c))


def bell_basis_eigenvalues(c1: float, c2: float, c3: float) -> tuple[float, ...]:
    """Spectrum of the Bell-diagonal state C = diag(c1, c2, c3)."""
    return (
        (1 + c1 - c2 + c3) / 4,
        (1 - c1 + c2 + c3) / 4,
        (1 + c1 + c2 - c3) / 4,
        (1 - c1 - c2 - c3) / 4,
    )


def make_bell_diagonal(
    c1: float, c2: float, c3: float, tol: float = DEFAULT_TOL
) -> TwoQubitFano:
    """Zero Bloch vectors with a diagonal correlation dyadic.

    Raises:
        UnphysicalParametersError: if a correlation lies outside [-1, 1] or a
            Bell-basis eigenvalue is below ``-tol``.
    """
    for name, value in (("c1", c1), ("c2", c2), ("c3", c3)):
        if not np.isfinite(value) or abs(value) > 1.0 + tol:
            raise UnphysicalParametersError(f"{name}={value} outside [-1, 1]")
    eigenvalues = bell_basis_eigenvalues(c1, c2, c3)
    lowest = min(eigenvalues)
    if lowest < -tol:
        raise UnphysicalParametersError(
            f"C=diag({c1}, {c2}, {c3}) has Bell-basis eigenvalue {lowest:.6g} < 0"
        )
    return TwoQubitFano(C=np.diag([float(c1), float(c2), float(c3)]))


def make_werner(x: float, tol: float = DEFAULT_TOL) -> TwoQubitFano:
    """Werner state c11 = c22 = c33 = x, physical for x in [-1, 1/3].

    Raises:
        UnphysicalParametersError: outside the physicality window.
    """
    try:
        return make_bell_diagonal(x, x, x, tol=tol)
    except UnphysicalParametersError as exc:
        raise UnphysicalParametersError(
            f"Werner parameter x={x} outside [-1, 1/3]"
        ) from exc


def maximally_mixed() -> TwoQubitFano:
    return TwoQubitFano()


def singlet() -> TwoQubitFano:
    return make_bell_diagonal(-1.0, -1.0, -1.0)


def validate_density(rho: DensityMatrix4, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Report hermiticity defect, trace defect and lowest eigenvalue of ``rho``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    herm = hermiticity_defect(rho.m)
    trace_defect = abs(complex(np.trace(rho.m)) - 1.0)
    hermitian_part = 0.5 * (rho.m + rho.m.conj().T)
    min_eigenvalue = float(jacobi_eigh(hermitian_part).values[0])
    physical = herm <= tol and trace_defect <= tol and min_eigenvalue >= -tol
    return ValidationReport(
        hermiticity_defect=herm,
        trace_defect=trace_defect,
        min_eigenvalue=min_eigenvalue,
        physical=physical,
    )


def random_density(rng: np.random.Generator, rank: int = 4) -> DensityMatrix4:
    """Random full- or reduced-rank density matrix (Ginibre construction)."""
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    m = g @ g.conj().T
    m = m / np.trace(m).real
    return DensityMatrix4(0.5 * (m + m.conj().T))


def random_product_density(rng: np.random.Generator) -> DensityMatrix4:
    """Random product state rho_a x rho_b."""
    factors = []
    for _ in range(2):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        local = g @ g.conj().T
        factors.append(local / np.trace(local).real)
    m = np.kron(factors[0], factors[1])
    return DensityMatrix4(0.5 * (m + m.conj().T))
