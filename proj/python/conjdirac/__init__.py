"""Dirac-Coulomb bound states in the conjugate (g, g~) representation."""

from ._core import (
    ALPHA_CODATA,
    ELECTRON_REST_ENERGY_EV,
    BoundSolution,
    CheckRow,
    EnergyValue,
    KummerConvergenceError,
    NumericalError,
    PhysicsConfig,
    QuantumState,
    SpectrumRow,
    binding_energy_ev,
    derive_gamma,
    energy,
    fine_structure_splitting,
    kummer_m,
    make_state,
    run_cli,
    run_verification,
    sommerfeld_expansion,
    spectrum_table,
    spherical_harmonic,
    spherical_spinor,
)

__all__ = [
    "ALPHA_CODATA",
    "ELECTRON_REST_ENERGY_EV",
    "BoundSolution",
    "CheckRow",
    "EnergyValue",
    "KummerConvergenceError",
    "NumericalError",
    "PhysicsConfig",
    "QuantumState",
    "SpectrumRow",
    "binding_energy_ev",
    "derive_gamma",
    "energy",
    "fine_structure_splitting",
    "kummer_m",
    "make_state",
    "run_cli",
    "run_verification",
    "sommerfeld_expansion",
    "spectrum_table",
    "spherical_harmonic",
    "spherical_spinor",
]
