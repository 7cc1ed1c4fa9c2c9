"""State propagation: exact spectral evolution plus two independent oracles.

Phase convention
----------------
Amplitudes evolve as c(t) = V exp(+i E t) V^dagger c(0), i.e. the complex
conjugate of the exp(-iHt) convention.  This is the convention under which the
closed two-level blocks obey the textbook-style solution

    c_photon(t) = cos(l1 t) c_photon(0) + i sin(l1 t) c_atom(0),

which `rabi_oracle` implements in closed form.  Populations and all magnitude
observables are identical in either convention; only the signs of phases flip.
The same sign is used consistently by the RK4 oracle.
"""

from __future__ import annotations

import numpy as np

from .model import GateConfig

#: Labels of the two exactly closed two-level blocks (1-based index pairs).
RABI_BLOCKS = ("6-3", "9-4")


def propagate(h: np.ndarray, psi0: np.ndarray, t: float) -> np.ndarray:
    """Evolve psi0 for time t by exact eigendecomposition of the Hermitian h.

    Unitary to solver precision; norm is preserved to ~1e-14.
    """
    if t < 0:
        raise ValueError(f"propagation time must be non-negative, got {t}")
    energies, vectors = np.linalg.eigh(h)
    return vectors @ (np.exp(1j * energies * t) * (vectors.conj().T @ psi0))


def propagate_rk4(h: np.ndarray, psi0: np.ndarray, t: float, steps: int) -> np.ndarray:
    """Fixed-step classical RK4 integration of dpsi/dt = +i H psi.

    Independent cross-check for `propagate`.  No renormalization is applied;
    the norm drift is a useful integration-error diagnostic.  `steps` must
    keep the per-step phase advance ||H|| t / steps below 0.1.
    """
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    hnorm = np.linalg.norm(h, 2)
    if t > 0 and hnorm * t / steps >= 0.1:
        raise ValueError(
            f"step count {steps} too small: ||H||*t/steps = {hnorm * t / steps:.3g} >= 0.1"
        )
    a = 1j * h
    dt = t / steps
    psi = psi0.astype(complex, copy=True)
    for _ in range(steps):
        k1 = a @ psi
        k2 = a @ (psi + 0.5 * dt * k1)
        k3 = a @ (psi + 0.5 * dt * k2)
        k4 = a @ (psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return psi


def rabi_oracle(
    block: str,
    config: GateConfig,
    c_upper0: complex,
    c_lower0: complex,
    t: float,
) -> tuple[complex, complex]:
    """Closed-form two-level solution on one of the closed blocks.

    `c_upper0` is the two-photon ground amplitude (index 6 or 9), `c_lower0`
    the atomic-excitation partner (index 3 or 4).  Block 6-3 is resonant in
    both cases; block 9-4 carries the detuning delta1 on its atomic member,
    giving the generalized Rabi frequency sqrt(lambda1^2 + (delta1/2)^2).
    """
    if block not in RABI_BLOCKS:
        raise ValueError(f"unknown block {block!r}; expected one of {RABI_BLOCKS}")
    lam = config.lambda1
    delta = config.delta1 if block == "9-4" else 0.0
    omega = np.sqrt(lam**2 + (delta / 2.0) ** 2)
    c, s = np.cos(omega * t), np.sin(omega * t)
    frame = np.exp(0.5j * delta * t)
    upper = frame * ((c - 0.5j * delta / omega * s) * c_upper0 + 1j * lam / omega * s * c_lower0)
    lower = frame * (1j * lam / omega * s * c_upper0 + (c + 0.5j * delta / omega * s) * c_lower0)
    return upper, lower
