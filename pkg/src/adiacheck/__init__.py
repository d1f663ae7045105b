"""adiacheck: audit the degenerate adiabatic approximation of quantum schedules.

Simulates explicitly time-dependent Hamiltonians with degenerate spectra,
computes Wilczek-Zee holonomies and dynamical phases, and tests the
necessary and practical sufficient conditions for the adiabatic theorem,
validated against an exactly solvable four-level rotating-field model.
"""

from .conditions import (
    ConditionReport,
    build_report,
    gamma_necessary_closed_form,
    gamma_sufficient_closed_forms,
    necessary_check,
    necessary_margin,
    necessary_margin_series,
    practical_sufficient_check,
    sufficient_d0,
    sufficient_d0_series,
    sufficient_dn,
    sufficient_dn_series,
    u_floor_series,
    verdict_exit_code,
)
from .dynamics import (
    GammaExactCoefficients,
    WaveTrajectory,
    excited_leakage,
    fidelity,
    gamma_exact,
    gamma_exact_coefficients,
    gamma_exact_states,
    propagate,
)
from .holonomy import (
    DaaState,
    Holonomy,
    daa_state,
    dynamical_phase,
    dynamical_phases,
    level_holonomy,
    wz_holonomy,
)
from .models import (
    GammaParams,
    HamiltonianModel,
    ScheduleError,
    gamma_hamiltonian,
    gamma_matrices,
    load_schedule,
    sampled_model,
    save_schedule,
)
from .spectral import (
    LevelStructure,
    LevelStructureError,
    OverlapBlock,
    SnapshotSpectrum,
    TimeGrid,
    max_norm,
    model_spectrum,
    one_norm,
    overlap_block,
    overlap_series,
    smooth_frames,
    snapshot_decompose,
    spectrum_for,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionReport",
    "DaaState",
    "GammaExactCoefficients",
    "GammaParams",
    "HamiltonianModel",
    "Holonomy",
    "LevelStructure",
    "LevelStructureError",
    "OverlapBlock",
    "ScheduleError",
    "SnapshotSpectrum",
    "TimeGrid",
    "WaveTrajectory",
    "build_report",
    "daa_state",
    "dynamical_phase",
    "dynamical_phases",
    "excited_leakage",
    "fidelity",
    "gamma_exact",
    "gamma_exact_coefficients",
    "gamma_exact_states",
    "gamma_hamiltonian",
    "gamma_matrices",
    "gamma_necessary_closed_form",
    "gamma_sufficient_closed_forms",
    "level_holonomy",
    "load_schedule",
    "max_norm",
    "model_spectrum",
    "necessary_check",
    "necessary_margin",
    "necessary_margin_series",
    "one_norm",
    "overlap_block",
    "overlap_series",
    "practical_sufficient_check",
    "propagate",
    "sampled_model",
    "save_schedule",
    "smooth_frames",
    "snapshot_decompose",
    "spectrum_for",
    "sufficient_d0",
    "sufficient_d0_series",
    "sufficient_dn",
    "sufficient_dn_series",
    "u_floor_series",
    "verdict_exit_code",
    "wz_holonomy",
]
