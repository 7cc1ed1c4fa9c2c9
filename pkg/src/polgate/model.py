"""Physical model: parameter space, 9-state basis and rotating-frame Hamiltonian.

A single four-level atom (ground |0>, intermediate |+1>, |-1>, upper |2>)
interacts with two polarized photons.  The b-photon drives the lower
transitions |0> -> |-+1> with coupling lambda1 (b- drives |0>->|+1|, b+ drives
|0>->|-1>), the a-photon drives the upper transitions |-+1> -> |2> with
coupling lambda2.  In the frame rotating at the total free energy of the
two-photon ground configuration the Hamiltonian is time independent and the
detunings appear on the diagonal.

Basis ordering (1-based, used in all external output):

    1  |2>           atom in the upper level, both photons absorbed
    2  a+|+1>        b- photon absorbed
    3  a+|-1>        b+ photon absorbed
    4  a-|+1>        b- photon absorbed
    5  a-|-1>        b+ photon absorbed
    6  a+b+|0>
    7  a+b-|0>
    8  a-b+|0>
    9  a-b-|0>

Internally amplitudes are stored 0-based in a length-9 complex ndarray.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

DIM = 9

#: 1-based labels of the fixed basis ordering.
BASIS_LABELS = (
    "|2>",
    "a+|+1>",
    "a+|-1>",
    "a-|+1>",
    "a-|-1>",
    "a+b+|0>",
    "a+b-|0>",
    "a-b+|0>",
    "a-b-|0>",
)

# 0-based positions of the four two-photon ground-state amplitudes.
IDX_PP, IDX_PM, IDX_MP, IDX_MM = 5, 6, 7, 8
GROUND_SLICE = slice(5, 9)

# Coupling pattern, 1-based pairs.  lambda1 closes the four one-b-photon
# exchanges, lambda2 connects the |2> level to the two a-photon states.
_LAMBDA1_PAIRS = ((7, 2), (9, 4), (6, 3), (8, 5))
_LAMBDA2_PAIRS = ((1, 2), (1, 5))

_NORM_TOL = 1e-12


class CaseKind(Enum):
    """Detuning scenario selector.

    CASE_I: degenerate |+-1> levels, both lower transitions resonant
    (delta1 = 0 forced).  CASE_II: the |0> -> |-1> transition stays resonant
    while |0> -> |+1> is detuned by delta1.
    """

    CASE_I = "I"
    CASE_II = "II"


class ConfigError(ValueError):
    """Raised for physically invalid gate parameters."""


class NormalizationError(ValueError):
    """Raised when input qubit amplitudes are not normalized."""


@dataclass(frozen=True)
class GateConfig:
    """Full physical parameter set of one gate run.

    Rates are in units where lambda1-scale quantities are order one; `time`
    is the interaction duration in the matching inverse-rate unit.
    """

    case: CaseKind
    lambda1: float = 1.0
    lambda2: float = 1.0
    delta1: float = 0.0
    delta2: float = 0.0
    time: float = float(np.pi)

    def __post_init__(self) -> None:
        if self.lambda1 <= 0:
            raise ConfigError(f"lambda1 must be positive, got {self.lambda1}")
        if self.lambda2 < 0:
            raise ConfigError(f"lambda2 must be non-negative, got {self.lambda2}")
        if self.time < 0:
            raise ConfigError(f"time must be non-negative, got {self.time}")
        if self.case is CaseKind.CASE_I and self.delta1 != 0.0:
            raise ConfigError(
                f"Case I forces delta1 = 0 (degenerate |+-1> levels), got {self.delta1}"
            )


@dataclass(frozen=True)
class QubitInput:
    """Disentangled two-photon input (alpha+ a+ + alpha- a-)(beta+ b+ + beta- b-)|0>."""

    alpha_plus: complex
    alpha_minus: complex
    beta_plus: complex
    beta_minus: complex

    def __post_init__(self) -> None:
        na = abs(self.alpha_plus) ** 2 + abs(self.alpha_minus) ** 2
        nb = abs(self.beta_plus) ** 2 + abs(self.beta_minus) ** 2
        if abs(na - 1.0) > _NORM_TOL or abs(nb - 1.0) > _NORM_TOL:
            raise NormalizationError(
                f"qubit amplitudes not normalized: |alpha|^2={na!r}, |beta|^2={nb!r}"
            )

    @classmethod
    def from_alpha_minus_sq(
        cls,
        alpha_minus_sq: float,
        beta_plus: complex = 1.0,
        beta_minus: complex = 0.0,
        alpha_plus_phase: float = 0.0,
    ) -> "QubitInput":
        """Real-magnitude input parametrized by |alpha-|^2, with an optional
        phase on alpha+."""
        ap = np.sqrt(1.0 - alpha_minus_sq) * cmath.exp(1j * alpha_plus_phase)
        am = np.sqrt(alpha_minus_sq)
        return cls(ap, am, beta_plus, beta_minus)

    @property
    def products(self) -> tuple[complex, complex, complex, complex]:
        """The four amplitude products (alpha_i beta_j) in the order ++, +-, -+, --."""
        return (
            self.alpha_plus * self.beta_plus,
            self.alpha_plus * self.beta_minus,
            self.alpha_minus * self.beta_plus,
            self.alpha_minus * self.beta_minus,
        )

    @property
    def alpha_phases(self) -> tuple[float, float]:
        return (cmath.phase(self.alpha_plus), cmath.phase(self.alpha_minus))

    @property
    def beta_phases(self) -> tuple[float, float]:
        return (cmath.phase(self.beta_plus), cmath.phase(self.beta_minus))


#: Single a-/b-photon basis inputs, keyed by (a polarization, b polarization).
def basis_input(a_pol: str, b_pol: str) -> QubitInput:
    """Pure product input, e.g. basis_input('-', '+') is a-b+|0>."""
    if a_pol not in "+-" or b_pol not in "+-":
        raise ValueError(f"polarization labels must be '+' or '-', got {a_pol!r}, {b_pol!r}")
    return QubitInput(
        alpha_plus=1.0 if a_pol == "+" else 0.0,
        alpha_minus=1.0 if a_pol == "-" else 0.0,
        beta_plus=1.0 if b_pol == "+" else 0.0,
        beta_minus=1.0 if b_pol == "-" else 0.0,
    )


def build_hamiltonian(config: GateConfig) -> np.ndarray:
    """Rotating-frame 9x9 Hamiltonian matrix for the given parameters.

    Diagonal: delta2 on |2>, delta1 on the |+1> states (indices 2 and 4),
    zero elsewhere.  Off-diagonal: lambda1 on the four closed photon-exchange
    pairs, lambda2 on the |2> couplings.  The matrix is real symmetric, hence
    exactly Hermitian.
    """
    h = np.zeros((DIM, DIM), dtype=complex)
    h[0, 0] = config.delta2
    h[1, 1] = config.delta1
    h[3, 3] = config.delta1
    for i, j in _LAMBDA1_PAIRS:
        h[i - 1, j - 1] = config.lambda1
        h[j - 1, i - 1] = config.lambda1
    for i, j in _LAMBDA2_PAIRS:
        h[i - 1, j - 1] = config.lambda2
        h[j - 1, i - 1] = config.lambda2
    return h


def embed_input(q: QubitInput) -> np.ndarray:
    """State vector with the product amplitudes on indices 6..9 (1-based)."""
    psi = np.zeros(DIM, dtype=complex)
    psi[IDX_PP], psi[IDX_PM], psi[IDX_MP], psi[IDX_MM] = q.products
    return psi
