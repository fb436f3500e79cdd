"""Generalized amplitude damping (GAD) channel on two qubits.

Single-qubit Kraus operators for bath balance ``p`` and damping ``gamma``::

    U0 = sqrt(p)   (|0><0| + sqrt(1-gamma) |1><1|)
    U1 = sqrt(p)   sqrt(gamma) |0><1|
    U2 = sqrt(1-p) (sqrt(1-gamma) |0><0| + |1><1|)
    U3 = sqrt(1-p) sqrt(gamma) |1><0|

Correlated noise applies the same index to both qubits; uncorrelated noise
sums over independent indices.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ChannelAnnihilationError,
    IncompleteKrausSetError,
    NonPhysicalStateError,
    ParameterRangeError,
)
from .state import DEFAULT_TOL, DensityMatrix4, validate_density

logger = logging.getLogger(__name__)

COMPLETENESS_TOL = 1e-12
ANNIHILATION_TOL = 1e-12


class NoiseMode(str, Enum):
    """How the GAD noise acts on the two qubits."""

    CORRELATED = "correlated"
    UNCORRELATED = "uncorrelated"


@dataclass(frozen=True)
class ChannelParams:
    p: float
    gamma: float

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("gamma", self.gamma)):
            if not (0.0 <= value <= 1.0):
                raise ParameterRangeError(f"{name}={value} outside [0, 1]")


@dataclass(frozen=True, eq=False)
class KrausSet:
    ops: tuple[np.ndarray, ...]
    params: ChannelParams
    completeness_defect: float
    literal: bool = False

    @property
    def is_canonical(self) -> bool:
        return self.completeness_defect < COMPLETENESS_TOL


def completeness_defect(ops: "KrausSet | tuple[np.ndarray, ...] | list[np.ndarray]") -> float:
    """Max-norm of sum(U^dag U) - I."""
    matrices = ops.ops if isinstance(ops, KrausSet) else ops
    accum = np.zeros((2, 2), dtype=np.complex128)
    for op in matrices:
        accum += op.conj().T @ op
    return float(np.max(np.abs(accum - np.eye(2))))


def _kraus_matrices(p: float, gamma: float, *, literal: bool) -> tuple[np.ndarray, ...]:
    sp = math.sqrt(p)
    sq = math.sqrt(1.0 - p)
    damp = math.sqrt(1.0 - gamma)
    decay = math.sqrt(gamma)
    # The literally printed U1 lacks the sqrt(gamma) factor.
    u1_amp = sp if literal else sp * decay
    ops = (
        np.array([[sp, 0.0], [0.0, sp * damp]], dtype=np.complex128),
        np.array([[0.0, u1_amp], [0.0, 0.0]], dtype=np.complex128),
        np.array([[sq * damp, 0.0], [0.0, sq]], dtype=np.complex128),
        np.array([[0.0, 0.0], [sq * decay, 0.0]], dtype=np.complex128),
    )
    for op in ops:
        op.flags.writeable = False
    return ops


def gad_kraus_set(params: ChannelParams, *, literal: bool = False) -> KrausSet:
    """Build the four GAD Kraus operators for ``params``.

    ``literal=True`` reproduces the printed operator set whose U1 omits
    sqrt(gamma); it is not trace preserving and exists for demonstrations.
    """
    ops = _kraus_matrices(params.p, params.gamma, literal=literal)
    return KrausSet(
        ops=ops,
        params=params,
        completeness_defect=completeness_defect(ops),
        literal=literal,
    )


def gamma_of_time(gamma0: float, t: float) -> float:
    """Damping after time ``t`` at decay rate ``gamma0``: 1 - exp(-gamma0 t)."""
    if gamma0 < 0 or t < 0:
        raise ParameterRangeError(f"gamma0={gamma0} and t={t} must be non-negative")
    return -math.expm1(-gamma0 * t)


def _require_canonical(*sets: KrausSet) -> None:
    for kraus in sets:
        if not kraus.is_canonical:
            raise IncompleteKrausSetError(
                f"Kraus set at p={kraus.params.p}, gamma={kraus.params.gamma} has "
                f"completeness defect {kraus.completeness_defect:.3e}"
            )


def _require_physical(rho: DensityMatrix4, tol: float) -> None:
    report = validate_density(rho, tol)
    if not report.physical:
        raise NonPhysicalStateError(
            f"input state is not physical (hermiticity {report.hermiticity_defect:.2e}, "
            f"trace {report.trace_defect:.2e}, min eigenvalue {report.min_eigenvalue:.2e})"
        )


def _congruence(op: np.ndarray, m: np.ndarray) -> np.ndarray:
    return op @ m @ op.conj().T


def apply_uncorrelated(
    rho: DensityMatrix4,
    ka: KrausSet,
    kb: KrausSet,
    *,
    check_input: bool = True,
    tol: float = DEFAULT_TOL,
) -> DensityMatrix4:
    """Independent GAD noise on each qubit: sum_ij (Ua_i x Ub_j) rho (...)^dag.

    Raises:
        IncompleteKrausSetError: if either set is not trace preserving.
        NonPhysicalStateError: if ``check_input`` and ``rho`` is not physical.
    """
    _require_canonical(ka, kb)
    if check_input:
        _require_physical(rho, tol)
    out = np.zeros((4, 4), dtype=np.complex128)
    for ua in ka.ops:
        for ub in kb.ops:
            out += _congruence(np.kron(ua, ub), rho.m)
    return DensityMatrix4(0.5 * (out + out.conj().T))


def correlated_unnormalized(rho: DensityMatrix4, k: KrausSet) -> np.ndarray:
    """R = sum_i (U_i x U_i) rho (U_i x U_i)^dag, before renormalization."""
    out = np.zeros((4, 4), dtype=np.complex128)
    for u in k.ops:
        out += _congruence(np.kron(u, u), rho.m)
    return 0.5 * (out + out.conj().T)


def apply_correlated(
    rho: DensityMatrix4,
    k: KrausSet,
    *,
    check_input: bool = True,
    tol: float = DEFAULT_TOL,
) -> DensityMatrix4:
    """Same-index GAD noise on both qubits, renormalized to unit trace.

    The diagonal Kraus sum is not trace preserving, so R is divided by tr(R).

    Raises:
        IncompleteKrausSetError: if ``k`` is not trace preserving.
        NonPhysicalStateError: if ``check_input`` and ``rho`` is not physical.
        ChannelAnnihilationError: if tr(R) <= 1e-12.
    """
    _require_canonical(k)
    if check_input:
        _require_physical(rho, tol)
    r = correlated_unnormalized(rho, k)
    trace = float(np.trace(r).real)
    if trace <= ANNIHILATION_TOL:
        raise ChannelAnnihilationError(
            f"correlated map annihilates the state at p={k.params.p}, "
            f"gamma={k.params.gamma} (trace {trace:.3e})"
        )
    return DensityMatrix4(r / trace)


def apply_gad(
    rho: DensityMatrix4,
    params: ChannelParams,
    mode: NoiseMode,
    *,
    check_input: bool = True,
    tol: float = DEFAULT_TOL,
) -> DensityMatrix4:
    """Apply the canonical GAD channel with ``params`` in the given noise mode."""
    kraus = gad_kraus_set(params)
    if mode is NoiseMode.CORRELATED:
        return apply_correlated(rho, kraus, check_input=check_input, tol=tol)
    return apply_uncorrelated(rho, kraus, kraus, check_input=check_input, tol=tol)
