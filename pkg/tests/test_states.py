import numpy as np
import pytest

from stabc import (
    BlochVector,
    DensityState,
    DimensionMismatchError,
    NoKnownFiducialError,
    NotNormalizedError,
    NotPrimeError,
    bloch_to_state,
    certify_fiducial,
    complexity_by_moments,
    complexity_upper_bound,
    enumerate_stabilizer_states,
    hs_norm,
    known_fiducial,
    random_pure,
    state_to_bloch,
    weyl_matrix,
)
from stabc.states import SIGMA_X, SIGMA_Y, SIGMA_Z


def test_bloch_to_state_examples():
    assert np.allclose(bloch_to_state(BlochVector(0, 0, 1)).rho, np.diag([1.0, 0.0]))
    assert np.allclose(bloch_to_state(BlochVector(0, 0, 0)).rho, np.eye(2) / 2)
    t = bloch_to_state(BlochVector(*(np.ones(3) / np.sqrt(3))))
    expected = 0.5 * (np.eye(2) + (SIGMA_X + SIGMA_Y + SIGMA_Z) / np.sqrt(3))
    assert np.allclose(t.rho, expected, atol=1e-15)


def test_state_to_bloch_examples():
    assert np.allclose(state_to_bloch(DensityState.maximally_mixed(2)).as_array(), 0.0)
    assert np.allclose(state_to_bloch(DensityState.pure([1, 0])).as_array(), [0, 0, 1])
    with pytest.raises(DimensionMismatchError):
        state_to_bloch(DensityState.maximally_mixed(3))


def test_bloch_round_trip():
    rng = np.random.default_rng(17)
    for _ in range(100):
        direction = rng.standard_normal(3)
        direction *= rng.uniform() / np.linalg.norm(direction)
        b = BlochVector(*direction)
        back = state_to_bloch(bloch_to_state(b))
        assert np.linalg.norm(back.as_array() - b.as_array()) <= 1e-12


def test_bloch_vector_norm_validation():
    with pytest.raises(ValueError):
        BlochVector(1.0, 1.0, 1.0)
    BlochVector(1.0, 0.0, 0.0)  # boundary is fine


@pytest.mark.parametrize("d,count", [(2, 6), (3, 12), (5, 30)])
def test_stabilizer_enumeration_counts(d, count):
    group = enumerate_stabilizer_states(d)
    assert len(group.states) == count
    assert len(group.generators) == d + 1


def test_stabilizer_d2_matches_pauli_eigenvectors():
    group = enumerate_stabilizer_states(2)
    expected = []
    for sigma in (SIGMA_X, SIGMA_Y, SIGMA_Z):
        _, vecs = np.linalg.eigh(sigma)
        expected.extend(np.outer(v, v.conj()) for v in vecs.T)
    for exp in expected:
        assert any(hs_norm(exp - s.rho) <= 1e-10 for s in group.states)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_stabilizer_extremality(d):
    group = enumerate_stabilizer_states(d)
    floor = d * d - d
    for state in group.states:
        assert abs(complexity_by_moments(state) - floor) <= 1e-9
    # no random pure state undercuts the floor
    for seed in range(200):
        assert complexity_by_moments(random_pure(d, seed)) >= floor - 1e-9


def test_stabilizer_states_are_distinct():
    group = enumerate_stabilizer_states(3)
    states = group.states
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            assert hs_norm(states[i].rho - states[j].rho) > 1e-6


def test_stabilizer_rejects_bad_dimensions():
    with pytest.raises(NotPrimeError):
        enumerate_stabilizer_states(4)
    with pytest.raises(NotPrimeError):
        enumerate_stabilizer_states(6)
    with pytest.raises(ValueError):
        enumerate_stabilizer_states(17)  # prime but beyond the enumeration cap


def test_known_fiducial_d2():
    fid = known_fiducial(2)
    assert fid.certified
    assert fid.max_deviation <= 1e-10
    bloch = state_to_bloch(fid.projector())
    assert np.allclose(bloch.as_array(), np.ones(3) / np.sqrt(3), atol=1e-12)
    assert complexity_by_moments(fid.projector()) == pytest.approx(8 / 3, abs=1e-9)


def test_known_fiducial_d3():
    fid = known_fiducial(3)
    assert fid.certified
    assert fid.max_deviation <= 1e-10
    assert np.allclose(np.abs(fid.vector), [0, 1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-12)
    assert complexity_by_moments(fid.projector()) == pytest.approx(7.5, abs=1e-9)


def test_known_fiducial_unavailable():
    with pytest.raises(NoKnownFiducialError):
        known_fiducial(4)


def test_certify_fiducial_overlaps():
    certified, deviation = certify_fiducial(np.array([0, 1, -1]) / np.sqrt(2))
    assert certified and deviation <= 1e-10
    # direct overlap oracle over the 8 non-identity points
    f = np.array([0, 1, -1]) / np.sqrt(2)
    for k in range(3):
        for l in range(3):
            if (k, l) == (0, 0):
                continue
            overlap = abs(np.vdot(f, weyl_matrix(3, k, l) @ f)) ** 2
            assert overlap == pytest.approx(0.25, abs=1e-12)


def test_certify_rejects_stabilizer_state():
    certified, deviation = certify_fiducial(np.array([1.0, 0.0]))
    assert not certified
    assert deviation >= 0.5  # |<0|Z|0>|^2 = 1 vs 1/3


def test_certify_requires_unit_norm():
    with pytest.raises(NotNormalizedError):
        certify_fiducial(np.array([1.0, 1.0]))


@pytest.mark.parametrize("d", [2, 3])
def test_fiducial_orbit_is_equally_complex(d):
    fid = known_fiducial(d)
    base = complexity_by_moments(fid.projector())
    assert base == pytest.approx(complexity_upper_bound(d), abs=1e-9)
    rho = fid.projector().rho
    for k in range(d):
        for l in range(d):
            dkl = weyl_matrix(d, k, l)
            orbit = DensityState(dkl @ rho @ dkl.conj().T, check=False)
            assert complexity_by_moments(orbit) == pytest.approx(base, abs=1e-9)


@pytest.mark.parametrize("d", [2, 3])
def test_fiducial_maximality_over_random_pure(d):
    ceiling = complexity_upper_bound(d)
    for seed in range(200):
        assert complexity_by_moments(random_pure(d, seed)) <= ceiling + 1e-9
