import json

import numpy as np
import pytest

from stabc import DensityState, StateFileError, random_mixed, state_to_bloch
from stabc.stateio import (
    bloch_state_dict,
    density_state_dict,
    load_state,
    pure_state_dict,
    save_state,
    state_from_dict,
)


def write(tmp_path, doc, name="state.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def test_pure_round_trip(tmp_path):
    vec = np.array([1.0, 1.0j]) / np.sqrt(2)
    path = write(tmp_path, pure_state_dict(vec))
    state = load_state(path)
    assert np.allclose(state.rho, np.outer(vec, vec.conj()), atol=1e-12)


def test_density_round_trip(tmp_path):
    original = random_mixed(3, 2, 4)
    path = write(tmp_path, density_state_dict(original))
    assert np.allclose(load_state(path).rho, original.rho, atol=1e-12)


def test_bloch_file(tmp_path):
    doc = {"dim": 2, "kind": "bloch", "bloch": [0.0, 0.0, 1.0]}
    state = load_state(write(tmp_path, doc))
    assert np.allclose(state.rho, np.diag([1.0, 0.0]))
    assert np.allclose(state_to_bloch(state).as_array(), [0, 0, 1])


def test_bloch_requires_dim2(tmp_path):
    doc = {"dim": 3, "kind": "bloch", "bloch": [0, 0, 1]}
    with pytest.raises(StateFileError, match="dim = 2"):
        load_state(write(tmp_path, doc))


def test_mixture_file(tmp_path):
    doc = {
        "dim": 2,
        "kind": "mixture",
        "mixture": [
            {"weight": 0.25, "amplitudes": [[1, 0], [0, 0]]},
            {"weight": 0.75, "amplitudes": [[0, 0], [1, 0]]},
        ],
    }
    state = load_state(write(tmp_path, doc))
    assert np.allclose(state.rho, np.diag([0.25, 0.75]))


def test_mixture_weight_validation():
    base = [{"weight": 0.6, "amplitudes": [[1, 0], [0, 0]]},
            {"weight": 0.6, "amplitudes": [[0, 0], [1, 0]]}]
    with pytest.raises(StateFileError, match="sum"):
        state_from_dict({"dim": 2, "kind": "mixture", "mixture": base})
    bad = [{"weight": -0.5, "amplitudes": [[1, 0], [0, 0]]},
           {"weight": 1.5, "amplitudes": [[0, 0], [1, 0]]}]
    with pytest.raises(StateFileError, match="nonnegative"):
        state_from_dict({"dim": 2, "kind": "mixture", "mixture": bad})


def test_pure_norm_bands():
    # within 1e-8: silently fine
    state_from_dict({"dim": 2, "kind": "pure", "amplitudes": [[1.0 + 5e-9, 0], [0, 0]]})
    # within 1e-4: renormalized with a warning
    with pytest.warns(UserWarning, match="renormalizing"):
        state = state_from_dict({"dim": 2, "kind": "pure", "amplitudes": [[1.0 + 5e-5, 0], [0, 0]]})
    assert abs(np.trace(state.rho) - 1.0) <= 1e-12
    # beyond 1e-4: rejected
    with pytest.raises(StateFileError, match="unit-norm"):
        state_from_dict({"dim": 2, "kind": "pure", "amplitudes": [[1.1, 0], [0, 0]]})


def test_density_must_be_valid():
    doc = {"dim": 2, "kind": "density",
           "matrix": [[1.0, 0], [0.5, 0], [0.0, 0], [0.5, 0]]}  # not Hermitian
    with pytest.raises(StateFileError):
        state_from_dict(doc)
    short = {"dim": 2, "kind": "density", "matrix": [[1.0, 0]]}
    with pytest.raises(StateFileError, match="entries"):
        state_from_dict(short)


def test_schema_errors():
    with pytest.raises(StateFileError, match="kind"):
        state_from_dict({"dim": 2})
    with pytest.raises(StateFileError, match="unknown kind"):
        state_from_dict({"dim": 2, "kind": "wavefunction"})
    with pytest.raises(StateFileError, match="pairs"):
        state_from_dict({"dim": 2, "kind": "pure", "amplitudes": [1.0, 0.0]})
    with pytest.raises(StateFileError, match="JSON object"):
        state_from_dict([1, 2, 3])


def test_unparseable_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(StateFileError, match="parse"):
        load_state(path)


def test_save_state_round_trip(tmp_path):
    doc = bloch_state_dict(state_to_bloch(DensityState.maximally_mixed(2)))
    path = tmp_path / "mm.json"
    save_state(doc, path)
    assert np.allclose(load_state(path).rho, np.eye(2) / 2)
