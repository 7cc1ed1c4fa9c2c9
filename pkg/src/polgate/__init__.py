"""Polarization-photon conditional-phase gate simulator.

Simulates two polarized photons interacting with a single four-level atom,
extracts the conditional phase shifts and retention figures of the resulting
two-qubit gate, and synthesizes a Controlled-NOT from three applications of
the conditional-phase primitive.
"""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    BASIS_LABELS,
    CaseKind,
    ConfigError,
    GateConfig,
    NormalizationError,
    QubitInput,
    basis_input,
    build_hamiltonian,
    embed_input,
)
from .propagator import propagate, propagate_rk4, rabi_oracle  # noqa: E402
from .analysis import (  # noqa: E402
    EPS_GUARD,
    GateAnalysis,
    PhaseObservables,
    UndefinedObservable,
    analyze,
    ideal_unitary,
    wrap_phase,
)
from .gate import (  # noqa: E402
    CNOT_CONFIG,
    BranchPhases,
    CnotScore,
    EffectiveGate,
    GateSynthesisError,
    branch_phases,
    cnot_synthesis,
    compose,
    effective_gate,
    gate_distance,
    ideal_cnot,
)
from .sweep import (  # noqa: E402
    SweepResult,
    fig2_sweep,
    fig3_timeseries,
    fig4_sweep,
    fig5_sweep,
)

__all__ = [
    "__version__",
    "BASIS_LABELS",
    "CaseKind",
    "ConfigError",
    "GateConfig",
    "NormalizationError",
    "QubitInput",
    "basis_input",
    "build_hamiltonian",
    "embed_input",
    "propagate",
    "propagate_rk4",
    "rabi_oracle",
    "EPS_GUARD",
    "GateAnalysis",
    "PhaseObservables",
    "UndefinedObservable",
    "analyze",
    "ideal_unitary",
    "wrap_phase",
    "CNOT_CONFIG",
    "BranchPhases",
    "CnotScore",
    "EffectiveGate",
    "GateSynthesisError",
    "branch_phases",
    "cnot_synthesis",
    "compose",
    "effective_gate",
    "gate_distance",
    "ideal_cnot",
    "SweepResult",
    "fig2_sweep",
    "fig3_timeseries",
    "fig4_sweep",
    "fig5_sweep",
]
