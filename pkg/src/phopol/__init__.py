"""Phonon-polaritons in nanoscale waveguides: Brillouin-induced opacity and
transparency spectra from input-output theory."""

from .analysis import (
    Extremum,
    InsufficientPeaksError,
    InvariantReport,
    SweepSpec,
    SweepTable,
    classify_regime,
    find_extrema,
    measure_splitting,
    run_sweep,
    verify_invariants,
)
from .config import ConfigError, RunConfig, emit_config, parse_config
from .emit import emit_csv, emit_json, format_csv
from .polariton import (
    Branch,
    PolaritonInputs,
    PolaritonPair,
    detuning_quantities,
    exact_eigen_oracle,
    fraction_sweep,
    mixing_amplitudes,
    polariton_damping,
    polariton_frequencies,
    polariton_pair,
)
from .pump import (
    PumpDrive,
    PumpSteadyState,
    effective_coupling,
    intracavity_pump_number,
    pump_detuning,
    pump_steady_amplitude,
    pump_steady_state,
)
from .spectra import (
    DegenerateResponseError,
    ProbeFrame,
    SpectrumPoint,
    linear_amplitudes,
    linear_spectrum_point,
    resolvent_kernel,
    response_kernel,
    ring_spectrum_point,
    spectrum_from_kernel,
)
from .waveguide import (
    DegenerateBranchError,
    ModeFrequencies,
    ModePair,
    WaveguideParams,
    allowed_wavenumbers,
    phonon_frequency,
    photon_frequency,
    solve_backward_phase_match,
    solve_forward_phase_match,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ConfigError",
    "DegenerateBranchError",
    "DegenerateResponseError",
    "Extremum",
    "InsufficientPeaksError",
    "InvariantReport",
    "ModeFrequencies",
    "ModePair",
    "PolaritonInputs",
    "PolaritonPair",
    "ProbeFrame",
    "PumpDrive",
    "PumpSteadyState",
    "RunConfig",
    "SpectrumPoint",
    "SweepSpec",
    "SweepTable",
    "WaveguideParams",
    "allowed_wavenumbers",
    "classify_regime",
    "detuning_quantities",
    "effective_coupling",
    "emit_config",
    "emit_csv",
    "emit_json",
    "exact_eigen_oracle",
    "find_extrema",
    "format_csv",
    "fraction_sweep",
    "intracavity_pump_number",
    "linear_amplitudes",
    "linear_spectrum_point",
    "measure_splitting",
    "mixing_amplitudes",
    "parse_config",
    "phonon_frequency",
    "photon_frequency",
    "polariton_damping",
    "polariton_frequencies",
    "polariton_pair",
    "pump_detuning",
    "pump_steady_amplitude",
    "pump_steady_state",
    "resolvent_kernel",
    "response_kernel",
    "ring_spectrum_point",
    "run_sweep",
    "solve_backward_phase_match",
    "solve_forward_phase_match",
    "spectrum_from_kernel",
    "verify_invariants",
]
