"""Observables of one gate run: projection efficiency, amplitude retention,
conditional phase shifts, retention ratio, quality factor, ideal unitaries.

All per-branch quantities are ordered (++, +-, -+, --), where the first index
is the a-photon polarization and the second the b-photon polarization.
Quantities whose definition divides by a near-zero input amplitude are guarded
by EPS_GUARD and reported as None instead of blowing up.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .model import (
    GROUND_SLICE,
    CaseKind,
    GateConfig,
    QubitInput,
    build_hamiltonian,
    embed_input,
)
from .propagator import propagate

#: Magnitude threshold below which a ratio or phase is treated as undefined.
#: Separates genuine zero inputs from leakage-scale amplitudes (~1e-3).
EPS_GUARD = 1e-6

BRANCHES = ("++", "+-", "-+", "--")


class UndefinedObservable(ValueError):
    """Raised when an observable's defining amplitudes are below EPS_GUARD."""


def wrap_phase(x: float) -> float:
    """Wrap an angle to the interval (-pi, pi]."""
    w = math.fmod(x + math.pi, 2.0 * math.pi)
    if w <= 0.0:
        w += 2.0 * math.pi
    return w - math.pi


@dataclass(frozen=True)
class PhaseObservables:
    """Common and differential phase shifts, input phases subtracted.

    phi_bar_* is the common phase of the b_*-conditioned branch, dphi_* the
    differential shift between its a+ and a- components.  Fields are None
    when a required branch amplitude is below EPS_GUARD.
    """

    phi_bar_plus: float | None
    phi_bar_minus: float | None
    dphi_plus: float | None
    dphi_minus: float | None


@dataclass(frozen=True)
class GateAnalysis:
    """Every observable extracted from a single propagated run."""

    p0: float
    c: tuple[complex, complex, complex, complex]
    eta: tuple[float | None, float | None, float | None, float | None]
    phi: tuple[float | None, float | None, float | None, float | None]
    phases: PhaseObservables
    retention: float | None
    quality: float | None


def project_ground(psi_out: np.ndarray) -> tuple[float, tuple[complex, complex, complex, complex]]:
    """Project onto the atomic ground state.

    Returns the success probability p0 and the four surviving two-photon
    amplitudes (C++, C+-, C-+, C--) = (c6, c7, c8, c9).
    """
    ground = psi_out[GROUND_SLICE]
    p0 = float(np.sum(np.abs(ground) ** 2))
    return p0, (complex(ground[0]), complex(ground[1]), complex(ground[2]), complex(ground[3]))


def coefficient_phases(
    coefficients: tuple[complex, complex, complex, complex],
) -> tuple[float | None, float | None, float | None, float | None]:
    """arg(C_ij) wrapped to (-pi, pi], None where |C_ij| <= EPS_GUARD."""
    return tuple(
        cmath.phase(c) if abs(c) > EPS_GUARD else None for c in coefficients
    )  # type: ignore[return-value]


def amplitude_ratios(
    coefficients: tuple[complex, complex, complex, complex],
    q: QubitInput,
) -> tuple[float | None, float | None, float | None, float | None]:
    """Retained amplitude fractions eta_ij = |C_ij| / |alpha_i beta_j|.

    Entries are None where the input product magnitude is below EPS_GUARD
    (a minute leakage amplitude divided by a zero input is meaningless).
    """
    out = []
    for c, prod in zip(coefficients, q.products):
        denom = abs(prod)
        out.append(abs(c) / denom if denom > EPS_GUARD else None)
    return tuple(out)  # type: ignore[return-value]


def phase_observables(
    phi: tuple[float | None, float | None, float | None, float | None],
    q: QubitInput,
) -> PhaseObservables:
    """Common and differential phase shifts per control polarization.

    dphi_b = (phi_{+b} - phi_{-b} - phi^a_+ + phi^a_-)/2 and
    phi_bar_b = phi_{+b} - phi^a_+ - phi^b_b - dphi_b, both wrapped to
    (-pi, pi].  The pair (phi_bar, dphi) is only defined modulo a joint shift
    by pi; the representative fixed here keeps dphi in (-pi/2, pi/2] by
    wrapping the phase *difference* before halving, which also makes both
    observables exactly invariant under a common phase on the alpha or beta
    amplitudes.
    """
    phi_pp, phi_pm, phi_mp, phi_mm = phi
    pa_p, pa_m = q.alpha_phases
    pb_p, pb_m = q.beta_phases

    def branch(phi_plus: float | None, phi_minus: float | None, pb: float) -> tuple[float | None, float | None]:
        if phi_plus is None or phi_minus is None:
            return None, None
        dphi = 0.5 * wrap_phase(phi_plus - phi_minus - pa_p + pa_m)
        phi_bar = wrap_phase(phi_plus - pa_p - pb - dphi)
        return phi_bar, dphi

    bar_p, d_p = branch(phi_pp, phi_mp, pb_p)
    bar_m, d_m = branch(phi_pm, phi_mm, pb_m)
    return PhaseObservables(bar_p, bar_m, d_p, d_m)


def retention(
    coefficients: tuple[complex, complex, complex, complex],
    q: QubitInput,
) -> float | None:
    """Preservation of the control-photon intensity ratio.

    R = ((|C++|^2 + |C-+|^2) / (|C+-|^2 + |C--|^2)) * (|beta-| / |beta+|)^2.
    None when either beta magnitude is below EPS_GUARD or the denominator sum
    is below EPS_GUARD^2.
    """
    bp, bm = abs(q.beta_plus), abs(q.beta_minus)
    if bp <= EPS_GUARD or bm <= EPS_GUARD:
        return None
    c_pp, c_pm, c_mp, c_mm = coefficients
    denom = abs(c_pm) ** 2 + abs(c_mm) ** 2
    if denom <= EPS_GUARD**2:
        return None
    num = abs(c_pp) ** 2 + abs(c_mp) ** 2
    return (num / denom) * (bm / bp) ** 2


def quality_factor(
    eta: tuple[float | None, float | None, float | None, float | None],
    q: QubitInput,
) -> float:
    """Squared retention of the dominant input product.

    Tracks eta^2 of the branch holding the largest input amplitude product:
    eta_-+ for |alpha-|^2 >= 0.5, eta_++ for |alpha-|^2 <= 0.5 (the b+
    component dominates for both reference control states), and the minimum
    of the two at the symmetric point.
    """
    eta_pp, _, eta_mp, _ = eta
    am2 = abs(q.alpha_minus) ** 2
    candidates: list[float | None]
    if am2 > 0.5:
        candidates = [eta_mp]
    elif am2 < 0.5:
        candidates = [eta_pp]
    else:
        candidates = [eta_mp, eta_pp]
    if any(e is None for e in candidates):
        raise UndefinedObservable(
            f"quality factor undefined: selected eta absent at |alpha-|^2 = {am2}"
        )
    return min(e**2 for e in candidates)  # type: ignore[operator]


def ideal_unitary(
    case: CaseKind,
    phi_bar: float,
    dphi: float,
) -> np.ndarray:
    """Ideal conditional phase map on the ordered two-photon basis
    {a-b-, a+b-, a-b+, a+b+}.

    Symmetric case: exp(i phi_bar) * diag(e^{i dphi}, e^{-i dphi},
    e^{-i dphi}, e^{i dphi}).  Detuned case: diag(1, 1, e^{i(phi_bar - dphi)},
    e^{i(phi_bar + dphi)}) -- the b+ branch carries the phases, with its a-
    component picking up phi_bar - dphi, consistent with the ground-state
    projection decomposition.
    """
    if case is CaseKind.CASE_I:
        return cmath.exp(1j * phi_bar) * np.diag(
            np.exp(1j * np.array([dphi, -dphi, -dphi, dphi]))
        )
    return np.diag(
        [1.0, 1.0, cmath.exp(1j * (phi_bar - dphi)), cmath.exp(1j * (phi_bar + dphi))]
    )


def analyze(config: GateConfig, q: QubitInput) -> GateAnalysis:
    """Propagate the embedded input for config.time and extract everything."""
    psi_out = propagate(build_hamiltonian(config), embed_input(q), config.time)
    p0, coeffs = project_ground(psi_out)
    eta = amplitude_ratios(coeffs, q)
    phi = coefficient_phases(coeffs)
    phases = phase_observables(phi, q)
    try:
        quality = quality_factor(eta, q)
    except UndefinedObservable:
        quality = None
    return GateAnalysis(
        p0=p0,
        c=coeffs,
        eta=eta,
        phi=phi,
        phases=phases,
        retention=retention(coeffs, q),
        quality=quality,
    )
