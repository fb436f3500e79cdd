"""Tests for the GAD Kraus set and the two noise maps."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gad_negativity.core.channel import (
    ChannelParams,
    NoiseMode,
    apply_correlated,
    apply_gad,
    apply_uncorrelated,
    completeness_defect,
    correlated_unnormalized,
    gad_kraus_set,
    gamma_of_time,
)
from gad_negativity.core.errors import (
    ChannelAnnihilationError,
    IncompleteKrausSetError,
    NonPhysicalStateError,
    ParameterRangeError,
)
from gad_negativity.core.state import (
    DensityMatrix4,
    density_to_fano,
    fano_to_density,
    make_bell_diagonal,
    random_density,
    singlet,
    validate_density,
)

prob = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@given(p=prob, gamma=prob)
def test_canonical_set_is_complete(p, gamma):
    kraus = gad_kraus_set(ChannelParams(p, gamma))
    assert kraus.completeness_defect < 1e-12
    assert kraus.is_canonical


def test_literal_set_defect():
    kraus = gad_kraus_set(ChannelParams(0.5, 0.5), literal=True)
    assert completeness_defect(kraus) == pytest.approx(0.25)
    assert not kraus.is_canonical


def test_zero_operators_have_unit_defect():
    assert completeness_defect([np.zeros((2, 2))] * 4) == pytest.approx(1.0)


@pytest.mark.parametrize("p, gamma", [(-0.1, 0.5), (0.5, 1.2), (math.nan, 0.0)])
def test_parameter_range(p, gamma):
    with pytest.raises(ParameterRangeError):
        ChannelParams(p, gamma)


def test_gamma_of_time():
    assert gamma_of_time(1.0, 0.0) == 0.0
    assert gamma_of_time(2.0, 1.0) == pytest.approx(1 - math.exp(-2.0))
    assert gamma_of_time(1e-20, 1.0) == pytest.approx(1e-20)
    with pytest.raises(ParameterRangeError):
        gamma_of_time(-1.0, 1.0)


def test_identity_at_zero_damping(rng):
    for _ in range(20):
        rho = random_density(rng)
        p = float(rng.uniform())
        for mode in NoiseMode:
            out = apply_gad(rho, ChannelParams(p, 0.0), mode)
            assert out.max_deviation(rho) < 1e-12


def test_unnormalized_trace_at_zero_damping(rng):
    rho = random_density(rng)
    k = gad_kraus_set(ChannelParams(0.3, 0.0))
    trace = np.trace(correlated_unnormalized(rho, k)).real
    assert trace == pytest.approx(0.3**2 + 0.7**2)


@pytest.mark.parametrize("c", [(-0.1, -0.2, -0.7), (-0.5, -0.5, -0.5), (0.2, -0.3, 0.1)])
@pytest.mark.parametrize("p, gamma", [(0.1, 0.4), (0.5, 0.5), (0.9, 0.95)])
def test_correlated_trace_formula(c, p, gamma):
    rho = fano_to_density(make_bell_diagonal(*c))
    k = gad_kraus_set(ChannelParams(p, gamma))
    q = p**2 + (1 - p) ** 2
    expected = q * ((1 - gamma) + (1 + c[2]) * gamma**2 / 2)
    assert np.trace(correlated_unnormalized(rho, k)).real == pytest.approx(expected)


def test_uncorrelated_preserves_trace_and_physicality(rng):
    for _ in range(10):
        rho = random_density(rng)
        k = gad_kraus_set(ChannelParams(float(rng.uniform()), float(rng.uniform())))
        out = apply_uncorrelated(rho, k, k)
        assert validate_density(out).physical


def test_uncorrelated_trace_is_exact_on_random_inputs(rng):
    worst = 0.0
    for _ in range(1000):
        rho = random_density(rng)
        p, gamma = (float(v) for v in rng.uniform(size=2))
        k = gad_kraus_set(ChannelParams(p, gamma))
        worst = max(worst, abs(apply_uncorrelated(rho, k, k).trace - 1.0))
    assert worst < 1e-12


def test_correlated_output_is_normalized(rng):
    rho = random_density(rng)
    out = apply_correlated(rho, gad_kraus_set(ChannelParams(0.2, 0.7)))
    assert out.trace == pytest.approx(1.0, abs=1e-12)
    assert validate_density(out).physical


def test_uncorrelated_full_damping_gives_product_state():
    rho = fano_to_density(make_bell_diagonal(-0.5, -0.5, -0.5))
    k = gad_kraus_set(ChannelParams(1.0, 1.0))
    out = apply_uncorrelated(rho, k, k)
    expected = np.zeros((4, 4))
    expected[0, 0] = 1.0
    np.testing.assert_allclose(out.m, expected, atol=1e-15)


def test_singlet_invariant_under_correlated_noise():
    rho = fano_to_density(singlet())
    out = apply_correlated(rho, gad_kraus_set(ChannelParams(0.3, 0.6)))
    assert out.max_deviation(rho) < 1e-12


def test_singlet_annihilated_at_full_damping():
    rho = fano_to_density(singlet())
    with pytest.raises(ChannelAnnihilationError):
        apply_correlated(rho, gad_kraus_set(ChannelParams(0.3, 1.0)))


def test_correlated_output_acquires_bloch_z_components():
    rho = fano_to_density(make_bell_diagonal(-0.1, -0.2, -0.7))
    fano = density_to_fano(apply_correlated(rho, gad_kraus_set(ChannelParams(0.1, 0.5))))
    assert abs(fano.s[2]) > 1e-3
    assert fano.s[2] == pytest.approx(fano.t[2])
    off = fano.C - np.diag(np.diag(fano.C))
    assert np.max(np.abs(off)) < 1e-12


def test_literal_set_is_refused():
    rho = fano_to_density(singlet())
    literal = gad_kraus_set(ChannelParams(0.5, 0.5), literal=True)
    with pytest.raises(IncompleteKrausSetError):
        apply_correlated(rho, literal)
    with pytest.raises(IncompleteKrausSetError):
        apply_uncorrelated(rho, literal, literal)


def test_non_physical_input_is_refused():
    bad = DensityMatrix4(np.diag([0.6, 0.6, -0.1, -0.1]))
    k = gad_kraus_set(ChannelParams(0.5, 0.5))
    with pytest.raises(NonPhysicalStateError):
        apply_uncorrelated(bad, k, k)
    apply_uncorrelated(bad, k, k, check_input=False)
