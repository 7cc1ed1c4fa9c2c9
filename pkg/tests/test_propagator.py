import math

import numpy as np
import pytest

from polgate.model import CaseKind, GateConfig, basis_input, build_hamiltonian, embed_input
from polgate.propagator import propagate, propagate_rk4, rabi_oracle

CASE2 = GateConfig(case=CaseKind.CASE_II, lambda2=2.5, delta1=15.0, delta2=30.0)


def test_propagate_preserves_norm():
    h = build_hamiltonian(CASE2)
    psi0 = embed_input(basis_input("-", "+"))
    psi = propagate(h, psi0, CASE2.time)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-13)


def test_propagate_identity_at_t0():
    h = build_hamiltonian(CASE2)
    psi0 = embed_input(basis_input("+", "-"))
    assert np.allclose(propagate(h, psi0, 0.0), psi0)


def test_propagate_rejects_negative_time():
    h = build_hamiltonian(CASE2)
    with pytest.raises(ValueError):
        propagate(h, embed_input(basis_input("-", "+")), -1.0)


def test_propagate_composes():
    h = build_hamiltonian(CASE2)
    psi0 = embed_input(basis_input("-", "+"))
    one = propagate(h, psi0, 1.7)
    two = propagate(h, propagate(h, psi0, 0.9), 0.8)
    assert np.max(np.abs(one - two)) < 1e-12


def test_rk4_matches_spectral():
    h = build_hamiltonian(CASE2)
    psi0 = embed_input(basis_input("-", "+"))
    exact = propagate(h, psi0, math.pi)
    approx = propagate_rk4(h, psi0, math.pi, steps=20000)
    assert np.max(np.abs(exact - approx)) < 1e-10


def test_rk4_step_guard():
    h = build_hamiltonian(CASE2)
    psi0 = embed_input(basis_input("-", "+"))
    with pytest.raises(ValueError):
        propagate_rk4(h, psi0, math.pi, steps=10)
    with pytest.raises(ValueError):
        propagate_rk4(h, psi0, math.pi, steps=0)


def test_half_rabi_cycle_flips_sign():
    # with no upper-level coupling each photon pair completes cos(pi) = -1
    config = GateConfig(case=CaseKind.CASE_I, lambda2=0.0, time=math.pi)
    h = build_hamiltonian(config)
    for a, b in (("+", "+"), ("+", "-"), ("-", "+"), ("-", "-")):
        psi0 = embed_input(basis_input(a, b))
        psi = propagate(h, psi0, config.time)
        assert np.max(np.abs(psi + psi0)) < 1e-12


@pytest.mark.parametrize("block,upper,lower", [("6-3", 5, 2), ("9-4", 8, 3)])
def test_rabi_oracle_matches_propagation(block, upper, lower):
    rng = np.random.default_rng(7)
    for _ in range(5):
        c = rng.normal(size=2) + 1j * rng.normal(size=2)
        c /= np.linalg.norm(c)
        t = rng.uniform(0.1, math.pi)
        psi0 = np.zeros(9, dtype=complex)
        psi0[upper], psi0[lower] = c
        out = propagate(build_hamiltonian(CASE2), psi0, t)
        c_up, c_low = rabi_oracle(block, CASE2, c[0], c[1], t)
        assert abs(out[upper] - c_up) < 1e-12
        assert abs(out[lower] - c_low) < 1e-12
        # the block is closed: nothing leaks to the other seven states
        mask = np.ones(9, dtype=bool)
        mask[[upper, lower]] = False
        assert np.max(np.abs(out[mask])) < 1e-12


def test_rabi_oracle_rejects_unknown_block():
    with pytest.raises(ValueError):
        rabi_oracle("1-2", CASE2, 1.0, 0.0, 1.0)


def test_detuned_block_suppresses_transfer():
    # strong detuning on 9-4 keeps the population on the photon state
    config = GateConfig(case=CaseKind.CASE_II, lambda1=1.0, delta1=15.0, delta2=30.0)
    _, c_low = rabi_oracle("9-4", config, 1.0, 0.0, math.pi)
    assert abs(c_low) ** 2 < config.lambda1**2 / (config.lambda1**2 + (config.delta1 / 2) ** 2) + 1e-12
