import math

import numpy as np
import pytest

from polgate.model import (
    DIM,
    CaseKind,
    ConfigError,
    GateConfig,
    NormalizationError,
    QubitInput,
    basis_input,
    build_hamiltonian,
    embed_input,
)


def test_config_defaults():
    config = GateConfig(case=CaseKind.CASE_I)
    assert config.lambda1 == 1.0
    assert config.lambda2 == 1.0
    assert config.time == pytest.approx(math.pi)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"lambda1": 0.0},
        {"lambda1": -1.0},
        {"lambda2": -0.5},
        {"time": -0.1},
        {"delta1": 3.0},  # forbidden in the symmetric case
    ],
)
def test_config_rejects_invalid(kwargs):
    with pytest.raises(ConfigError):
        GateConfig(case=CaseKind.CASE_I, **kwargs)


def test_case_ii_allows_detuned_lower_level():
    config = GateConfig(case=CaseKind.CASE_II, delta1=15.0, delta2=30.0)
    assert config.delta1 == 15.0


def test_hamiltonian_structure():
    config = GateConfig(case=CaseKind.CASE_II, lambda1=1.3, lambda2=0.7, delta1=4.0, delta2=9.0)
    h = build_hamiltonian(config)
    assert h.shape == (DIM, DIM)
    assert np.allclose(h, h.conj().T)
    assert np.allclose(np.diag(h).real, [9.0, 4.0, 0.0, 4.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    # photon-exchange couplings (1-based pairs (7,2), (9,4), (6,3), (8,5))
    for i, j in ((6, 1), (8, 3), (5, 2), (7, 4)):
        assert h[i, j] == pytest.approx(1.3)
    # upper-level couplings (1,2) and (1,5)
    assert h[0, 1] == pytest.approx(0.7)
    assert h[0, 4] == pytest.approx(0.7)
    # 3 nonzero diagonal entries + 8 lambda1 + 4 lambda2 couplings
    assert np.count_nonzero(h) == 3 + 2 * 4 + 2 * 2


def test_qubit_input_normalization_enforced():
    with pytest.raises(NormalizationError):
        QubitInput(1.0, 1.0, 1.0, 0.0)
    with pytest.raises(NormalizationError):
        QubitInput(1.0, 0.0, 0.5, 0.5)


def test_from_alpha_minus_sq():
    q = QubitInput.from_alpha_minus_sq(0.25)
    assert abs(q.alpha_minus) ** 2 == pytest.approx(0.25)
    assert abs(q.alpha_plus) ** 2 == pytest.approx(0.75)
    assert q.beta_plus == 1.0
    q = QubitInput.from_alpha_minus_sq(0.5, alpha_plus_phase=math.pi / 2)
    assert q.alpha_plus.real == pytest.approx(0.0, abs=1e-15)
    assert q.alpha_plus.imag == pytest.approx(math.sqrt(0.5))


def test_products_ordering():
    q = QubitInput(0.6, 0.8, 0.8, 0.6)
    pp, pm, mp, mm = q.products
    assert pp == pytest.approx(0.48)
    assert pm == pytest.approx(0.36)
    assert mp == pytest.approx(0.64)
    assert mm == pytest.approx(0.48)


def test_basis_input_placement():
    psi = embed_input(basis_input("-", "+"))
    assert psi[7] == 1.0
    assert np.sum(np.abs(psi)) == 1.0
    psi = embed_input(basis_input("+", "+"))
    assert psi[5] == 1.0


def test_basis_input_rejects_bad_labels():
    with pytest.raises(ValueError):
        basis_input("x", "+")


def test_embed_input_norm():
    q = QubitInput.from_alpha_minus_sq(0.3, 1 / math.sqrt(2), 1 / math.sqrt(2))
    psi = embed_input(q)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    assert np.all(psi[:5] == 0)
