"""Canned parameter-sweep experiments emitting tabular results.

Each sweep returns a SweepResult whose rows follow the grid order exactly and
whose metadata records the configuration template and grid.  Angles in rows
are reported in degrees; undefined observables appear as None.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .analysis import analyze
from .gate import branch_phases, effective_gate
from .model import CaseKind, GateConfig, QubitInput, build_hamiltonian, embed_input, basis_input
from .propagator import propagate

#: The two reference control-photon states used in the quantum-input sweeps.
BETA_1 = (1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0))
BETA_2 = (math.sqrt(3.0) / 2.0, 0.5)

_BASIS_ORDERING_NOTE = (
    "basis states numbered 1..9 in the fixed ordering "
    "{|2>, a+|+1>, a+|-1>, a-|+1>, a-|-1>, a+b+|0>, a+b-|0>, a-b+|0>, a-b-|0>}"
)

DEFAULT_ALPHA_GRID = tuple(np.linspace(0.0, 1.0, 41))
DEFAULT_LAMBDA2_GRID = tuple(np.linspace(0.25, 10.0, 30))
DEFAULT_FIG2_DETUNINGS = {CaseKind.CASE_I: (5.0, 10.0, 30.0), CaseKind.CASE_II: (10.0, 30.0, 60.0)}


@dataclass(frozen=True)
class SweepResult:
    columns: tuple[str, ...]
    rows: list[tuple]
    metadata: dict[str, Any] = field(default_factory=dict)


def _metadata(**kwargs: Any) -> dict[str, Any]:
    meta = {"version": __version__, "basis_ordering": _BASIS_ORDERING_NOTE}
    meta.update(kwargs)
    return meta


def _case_config(case: CaseKind, lambda2: float, delta2: float, lambda1: float = 1.0) -> GateConfig:
    delta1 = delta2 / 2.0 if case is CaseKind.CASE_II else 0.0
    return GateConfig(
        case=case,
        lambda1=lambda1,
        lambda2=lambda2,
        delta1=delta1,
        delta2=delta2,
        time=math.pi / lambda1,
    )


def fig2_sweep(
    case: CaseKind,
    detunings: tuple[float, ...] | None = None,
    lambda2_grid: tuple[float, ...] | None = None,
) -> SweepResult:
    """Differential phase shift versus amplitude retention, one curve per
    detuning (the detuned case uses delta1 = delta2 / 2), single a-b+ input.

    Rows: (delta2, lambda2, eta2_mp, dphi_plus_deg).
    """
    detunings = tuple(detunings) if detunings is not None else DEFAULT_FIG2_DETUNINGS[case]
    lambda2_grid = tuple(lambda2_grid) if lambda2_grid is not None else DEFAULT_LAMBDA2_GRID
    rows = []
    for delta2 in detunings:
        for lambda2 in lambda2_grid:
            g = effective_gate(_case_config(case, lambda2, delta2))
            eta2_mp = abs(g.matrix[2, 2]) ** 2
            dphi_plus = math.degrees(branch_phases(g).dphi_plus)
            rows.append((delta2, lambda2, eta2_mp, dphi_plus))
    return SweepResult(
        columns=("delta2", "lambda2", "eta2_mp", "dphi_plus_deg"),
        rows=rows,
        metadata=_metadata(
            experiment="fig2",
            case=case.value,
            lambda1=1.0,
            time=math.pi,
            input="a-b+|0>",
            detunings=list(detunings),
            lambda2_grid=list(lambda2_grid),
        ),
    )


#: Fixed time-series scenario: symmetric case, lambda2 = 2.5, delta2 = 30.
FIG3_CONFIG = GateConfig(
    case=CaseKind.CASE_I, lambda1=1.0, lambda2=2.5, delta1=0.0, delta2=30.0, time=math.pi
)

# populations recorded along the time series: (column label, 0-based index)
_FIG3_STATES = (
    ("pop_8_a-b+|0>", 7),
    ("pop_5_a-|-1>", 4),
    ("pop_2_a+|+1>", 1),
    ("pop_7_a+b-|0>", 6),
    ("pop_1_|2>", 0),
)


def fig3_timeseries(n_samples: int = 400) -> SweepResult:
    """Populations of the five participating basis states over t in [0, pi]
    for the fixed symmetric-case scenario, single a-b+ input.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be a positive integer")
    h = build_hamiltonian(FIG3_CONFIG)
    psi0 = embed_input(basis_input("-", "+"))
    times = np.linspace(0.0, FIG3_CONFIG.time, n_samples)
    rows = []
    for t in times:
        psi = propagate(h, psi0, float(t))
        pops = np.abs(psi) ** 2
        rows.append((float(t),) + tuple(float(pops[i]) for _, i in _FIG3_STATES))
    return SweepResult(
        columns=("time",) + tuple(label for label, _ in _FIG3_STATES),
        rows=rows,
        metadata=_metadata(
            experiment="fig3",
            case="I",
            lambda1=1.0,
            lambda2=2.5,
            delta2=30.0,
            input="a-b+|0>",
            n_samples=n_samples,
        ),
    )


def _fig45_config(case: CaseKind) -> GateConfig:
    return _case_config(case, lambda2=2.5, delta2=30.0)


def fig4_sweep(case: CaseKind, alpha_grid: tuple[float, ...] | None = None) -> SweepResult:
    """Retention R and quality factor over |alpha-|^2 for both reference
    control states.  Rows: (beta_label, alpha_minus_sq, retention, quality).
    """
    alpha_grid = tuple(alpha_grid) if alpha_grid is not None else DEFAULT_ALPHA_GRID
    config = _fig45_config(case)
    rows = []
    for beta_label, (bp, bm) in (("beta1", BETA_1), ("beta2", BETA_2)):
        for am2 in alpha_grid:
            result = analyze(config, QubitInput.from_alpha_minus_sq(am2, bp, bm))
            rows.append((beta_label, float(am2), result.retention, result.quality))
    return SweepResult(
        columns=("beta", "alpha_minus_sq", "retention", "quality"),
        rows=rows,
        metadata=_metadata(
            experiment="fig4",
            case=case.value,
            lambda1=config.lambda1,
            lambda2=config.lambda2,
            delta1=config.delta1,
            delta2=config.delta2,
            time=config.time,
            alpha_grid=list(alpha_grid),
        ),
    )


def fig5_sweep(
    alpha_grid: tuple[float, ...] | None = None,
    with_phase_variant: bool = True,
) -> SweepResult:
    """Phase shifts over |alpha-|^2 in the detuned case, for both reference
    control states, optionally repeated with a pi/4 phase on alpha+.

    Rows: (beta_label, phase_variant, alpha_minus_sq, dphi_plus_deg,
    dphi_minus_deg).
    """
    alpha_grid = tuple(alpha_grid) if alpha_grid is not None else DEFAULT_ALPHA_GRID
    config = _fig45_config(CaseKind.CASE_II)
    runs = [("beta1", BETA_1, 0.0), ("beta2", BETA_2, 0.0)]
    if with_phase_variant:
        runs.append(("beta1", BETA_1, math.pi / 4.0))
    rows = []
    for beta_label, (bp, bm), phase in runs:
        for am2 in alpha_grid:
            q = QubitInput.from_alpha_minus_sq(am2, bp, bm, alpha_plus_phase=phase)
            phases = analyze(config, q).phases
            rows.append(
                (
                    beta_label,
                    phase != 0.0,
                    float(am2),
                    None if phases.dphi_plus is None else math.degrees(phases.dphi_plus),
                    None if phases.dphi_minus is None else math.degrees(phases.dphi_minus),
                )
            )
    return SweepResult(
        columns=("beta", "phase_variant", "alpha_minus_sq", "dphi_plus_deg", "dphi_minus_deg"),
        rows=rows,
        metadata=_metadata(
            experiment="fig5",
            case="II",
            lambda1=config.lambda1,
            lambda2=config.lambda2,
            delta1=config.delta1,
            delta2=config.delta2,
            time=config.time,
            alpha_grid=list(alpha_grid),
            phase_variant_alpha_plus_phase=math.pi / 4.0 if with_phase_variant else None,
        ),
    )
