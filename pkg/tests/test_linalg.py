"""Tests for the cyclic Jacobi eigensolver."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gad_negativity.core.errors import EigensolverError, NonHermitianError
from gad_negativity.core.linalg import hermiticity_defect, jacobi_eigh, off_diagonal_norm

entries = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_subnormal=False)


def random_hermitian(rng, n=4):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


def test_diagonal_input_needs_no_sweeps():
    result = jacobi_eigh(np.diag([3.0, -1.0, 2.0, 0.5]))
    assert result.sweeps == 0
    np.testing.assert_allclose(result.values, [-1.0, 0.5, 2.0, 3.0])


def test_matches_numpy_on_random_complex_matrices(rng):
    for _ in range(25):
        m = random_hermitian(rng)
        result = jacobi_eigh(m)
        np.testing.assert_allclose(result.values, np.linalg.eigvalsh(m), atol=1e-10)
        assert result.max_residual < 1e-9


def test_eigenvectors_are_unitary(rng):
    v = jacobi_eigh(random_hermitian(rng)).vectors
    np.testing.assert_allclose(v.conj().T @ v, np.eye(4), atol=1e-12)


def test_degenerate_spectrum():
    m = np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex)
    m[1, 2] = 0.5j
    m[2, 1] = -0.5j
    np.testing.assert_allclose(jacobi_eigh(m).values, np.linalg.eigvalsh(m), atol=1e-12)


def test_rejects_non_hermitian():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(NonHermitianError):
        jacobi_eigh(m)


def test_rejects_non_square():
    with pytest.raises(NonHermitianError):
        jacobi_eigh(np.zeros((3, 4)))


def test_sweep_budget_exhaustion(rng):
    with pytest.raises(EigensolverError):
        jacobi_eigh(random_hermitian(rng), max_sweeps=0)


def test_helpers():
    m = np.array([[1.0, 2.0], [2.0 + 1e-3, 1.0]])
    assert hermiticity_defect(m) == pytest.approx(1e-3)
    assert off_diagonal_norm(m) == pytest.approx(np.hypot(2.0, 2.001))


@given(
    real=arrays(np.float64, (4, 4), elements=entries),
    imag=arrays(np.float64, (4, 4), elements=entries),
)
def test_spectrum_property(real, imag):
    m = (real + real.T) + 1j * (imag - imag.T)
    result = jacobi_eigh(m)
    scale = max(1.0, float(np.linalg.norm(m)))
    np.testing.assert_allclose(result.values, np.linalg.eigvalsh(m), atol=1e-9 * scale)
    assert np.all(np.diff(result.values) >= 0)
