import math

import numpy as np
import pytest

from polgate.analysis import ideal_unitary
from polgate.gate import (
    CNOT_CONFIG,
    EffectiveGate,
    GateSynthesisError,
    basis_change_target,
    branch_phases,
    cnot_synthesis,
    compose,
    effective_gate,
    gate_distance,
    ideal_cnot,
    linearity_check,
)
from polgate.model import CaseKind, GateConfig, QubitInput

CASE1_WEAK = GateConfig(case=CaseKind.CASE_I, lambda2=1.0, delta2=5.0)
CASE2 = GateConfig(case=CaseKind.CASE_II, lambda2=2.5, delta1=15.0, delta2=30.0)
BETA1 = (1 / math.sqrt(2), 1 / math.sqrt(2))


def test_trivial_gates():
    g = effective_gate(GateConfig(case=CaseKind.CASE_I, lambda2=0.0, time=math.pi))
    assert np.max(np.abs(g.matrix + np.eye(4))) < 1e-12
    g = effective_gate(GateConfig(case=CaseKind.CASE_I, delta2=5.0, time=0.0))
    assert np.max(np.abs(g.matrix - np.eye(4))) < 1e-12


def test_columns_subnormalized():
    g = effective_gate(CASE2)
    norms = np.linalg.norm(g.matrix, axis=0)
    assert np.all(norms <= 1.0 + 1e-10)
    assert g.leakage >= 0.0
    assert g.leakage == pytest.approx(float(np.max(1.0 - norms**2)), abs=1e-14)


def test_linearity():
    rng = np.random.default_rng(13)
    for _ in range(5):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        q = QubitInput(
            *(v[:2] / np.linalg.norm(v[:2])), *(v[2:] / np.linalg.norm(v[2:]))
        )
        assert linearity_check(CASE2, q) < 1e-10


def test_compose():
    g = effective_gate(CASE2)
    assert np.allclose(compose(g, 1).matrix, g.matrix)
    minus_i = EffectiveGate.from_matrix(-np.eye(4, dtype=complex))
    assert np.allclose(compose(minus_i, 2).matrix, np.eye(4))
    assert np.allclose(compose(g, 5).matrix, compose(compose(g, 2), 1).matrix @ compose(g, 3).matrix)
    with pytest.raises(ValueError):
        compose(g, 0)


def test_basis_change_turns_phase_into_flip():
    cz = EffectiveGate.from_matrix(np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex))
    assert np.max(np.abs(basis_change_target(cz).matrix - ideal_cnot())) < 1e-12


def test_basis_change_ignores_control_phases():
    g = EffectiveGate.from_matrix(np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex))
    assert np.allclose(basis_change_target(g).matrix, g.matrix)


def test_basis_change_is_isometric():
    g = effective_gate(CASE2)
    after = basis_change_target(g)
    # unitary conjugation preserves total weight; columns can trade a little
    assert np.linalg.norm(after.matrix) == pytest.approx(np.linalg.norm(g.matrix), abs=1e-12)
    norms = np.linalg.norm(after.matrix, axis=0)
    assert np.all(norms <= 1.0 + 1e-10)


def test_branch_phases_symmetric_case():
    bp = branch_phases(effective_gate(CASE1_WEAK))
    assert math.degrees(bp.dphi_plus) == pytest.approx(8.745579569338247, abs=1e-9)
    # symmetric case: equal and opposite shifts, equal common phases
    assert bp.dphi_plus == pytest.approx(-bp.dphi_minus, abs=1e-12)
    assert bp.phi_bar_plus == pytest.approx(bp.phi_bar_minus, abs=1e-12)
    assert math.degrees(bp.phi_bar_plus) == pytest.approx(171.25442043066175, abs=1e-9)


def test_mirrored_control_flips_sign():
    # conditioning on b- instead of b+ gives the opposite phase shift
    bp = branch_phases(effective_gate(CASE1_WEAK))
    assert bp.dphi_minus == pytest.approx(-math.radians(8.745579569338247), abs=1e-10)


def test_gate_distance_modes():
    target = ideal_cnot().astype(complex)
    g = EffectiveGate.from_matrix(target.copy())
    assert gate_distance(g, target) < 1e-12
    g2 = EffectiveGate.from_matrix(np.exp(0.3j) * target)
    assert gate_distance(g2, target, mode="global-phase") < 1e-6
    # different phases on each control block: only the per-block mode forgives
    m = target.copy()
    m[0:2, 0:2] *= np.exp(0.5j)
    m[2:4, 2:4] *= np.exp(-1.1j)
    g3 = EffectiveGate.from_matrix(m)
    assert gate_distance(g3, target, mode="per-block-phase") < 1e-6
    assert gate_distance(g3, target, mode="global-phase") > 0.5
    with pytest.raises(ValueError):
        gate_distance(g, target, mode="nonsense")


def test_effective_gate_close_to_ideal_unitary():
    # at near-unit retention the simulated map matches the ideal conditional
    # phase gate to within the leakage scale (up to one overall phase)
    g = effective_gate(CASE2)
    bp = branch_phases(g)
    u = ideal_unitary(CaseKind.CASE_II, bp.phi_bar_plus, bp.dphi_plus)
    assert gate_distance(g, u, mode="global-phase") <= math.sqrt(g.leakage)


def test_cnot_synthesis_scorecard():
    composite, score = cnot_synthesis()
    assert score.single_shift_deg == pytest.approx(59.85817219924831, abs=1e-9)
    assert score.upper_diag_mags[0] == pytest.approx(0.9953060423544249, abs=1e-10)
    assert score.upper_diag_mags[1] == pytest.approx(0.9953060423544249, abs=1e-10)
    assert score.upper_block_phase_deg == pytest.approx(-33.35390785001484, abs=1e-8)
    assert score.lower_antidiag_mags[0] == pytest.approx(0.9974260814616808, abs=1e-10)
    assert score.lower_block_phase_deg == pytest.approx(-179.79305612076945, abs=1e-8)
    assert score.max_small_entry == pytest.approx(0.009885362958910094, abs=1e-10)
    assert score.distance_per_block <= 2e-2
    # the matrix itself: -0.997 on the anti-diagonal of the b+ block
    assert composite.matrix[2, 3].real == pytest.approx(-0.9974195755200993, abs=1e-10)
    assert composite.matrix[3, 2].real == pytest.approx(-0.9974195755200993, abs=1e-10)


def test_cnot_synthesis_rejects_wrong_parameters():
    bad = GateConfig(case=CaseKind.CASE_II, lambda1=2.0, lambda2=1.0, delta1=65.0, delta2=70.0, time=math.pi)
    with pytest.raises(GateSynthesisError):
        cnot_synthesis(bad)


def test_ideal_cnot_matrix():
    m = ideal_cnot()
    assert np.allclose(m @ m, np.eye(4))
    assert m[2, 3] == 1.0 and m[3, 2] == 1.0 and m[2, 2] == 0.0
