"""Waveguide parameters, photon/phonon dispersions and SBS phase matching.

Conventions:
- Every frequency and rate is an angular frequency in 1/s. Values quoted in
  "Hz" for the nanowire parameter set are used as 1/s without a 2*pi factor.
- Wavenumbers are in 1/m, velocities in m/s, lengths in m.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DegenerateBranchError(ValueError):
    """Raised when a phase-matching branch has only the trivial q = 0 solution."""


@dataclass(frozen=True)
class WaveguideParams:
    """Physical parameters of a single-transverse-mode nanoscale waveguide.

    omega0: photon dispersion offset [1/s]
    v_g: photon group velocity [m/s]
    v_a: sound velocity [m/s]
    length_W: waveguide length [m]
    gamma: photon damping rate into free space [1/s]
    Gamma: phonon damping rate [1/s]
    g: SBS coupling [1/s]
    u: internal-external coupling per port [1/s]
    refractive_index_n: metadata only, not used in any formula
    """

    omega0: float = 4.9995e13
    v_g: float = 1e8
    v_a: float = 1e4
    length_W: float = 1e-2
    gamma: float = 1e5
    Gamma: float = 1e6
    g: float = 1e4
    u: float = 1e6
    refractive_index_n: float = 3.48

    def __post_init__(self):
        for name in ("v_g", "v_a", "length_W", "u"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)!r}")
        for name in ("gamma", "Gamma", "g"):
            if not getattr(self, name) >= 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)!r}")
        if not self.v_g > self.v_a:
            raise ValueError(f"v_g must exceed v_a, got v_g={self.v_g!r}, v_a={self.v_a!r}")
        if not np.isfinite(self.omega0):
            raise ValueError(f"omega0 must be finite, got {self.omega0!r}")


@dataclass(frozen=True)
class ModeFrequencies:
    """Frequencies of the signal photon, pump photon and phonon modes [1/s].

    Unlike ModePair these need not satisfy energy conservation; a finite
    ``omega_k - omega_kq - Omega_q`` is the photon-phonon detuning 2*delta.
    """

    omega_k: float = 1e14
    Omega_q: float = 1e10
    omega_kq: float = 1e14 - 1e10

    @property
    def omega_bar(self) -> float:
        """Signal frequency in the frame rotating at the pump mode frequency."""
        return self.omega_k - self.omega_kq


@dataclass(frozen=True)
class ModePair:
    """A phase-matched signal/pump/phonon triplet."""

    k_signal: float
    k_pump: float
    q_phonon: float
    omega_k: float
    omega_kq: float
    Omega_q: float

    @property
    def frequencies(self) -> ModeFrequencies:
        return ModeFrequencies(self.omega_k, self.Omega_q, self.omega_kq)

    def energy_residual(self) -> float:
        """Relative mismatch of omega_k - omega_kq against Omega_q."""
        scale = max(abs(self.Omega_q), np.finfo(float).tiny)
        return abs((self.omega_k - self.omega_kq) - self.Omega_q) / scale


def photon_frequency(k, params: WaveguideParams):
    """Two-branch linear photon dispersion omega0 + v_g*|k|."""
    return params.omega0 + params.v_g * np.abs(k)


def phonon_frequency(q, params: WaveguideParams):
    """Acoustic dispersion v_a*|q|."""
    return params.v_a * np.abs(q)


def allowed_wavenumbers(params: WaveguideParams, p_max: int) -> np.ndarray:
    """Wavenumbers 2*pi*p/W for p = -p_max..p_max, ascending."""
    if p_max < 0:
        raise ValueError(f"p_max must be >= 0, got {p_max}")
    p = np.arange(-p_max, p_max + 1)
    return 2 * np.pi * p / params.length_W


def solve_backward_phase_match(k_signal: float, params: WaveguideParams) -> ModePair:
    """Phase-match a signal photon against a counter-propagating pump.

    With k - q < 0, v_g*(|k| - |k - q|) = v_a*q becomes v_g*(2k - q) = v_a*q,
    so q = 2*k*v_g/(v_g + v_a).
    """
    if not k_signal > 0:
        raise ValueError(f"k_signal must be > 0, got {k_signal!r}")
    q = 2.0 * k_signal * params.v_g / (params.v_g + params.v_a)
    k_pump = k_signal - q
    return ModePair(
        k_signal=k_signal,
        k_pump=k_pump,
        q_phonon=q,
        omega_k=float(photon_frequency(k_signal, params)),
        omega_kq=float(photon_frequency(k_pump, params)),
        Omega_q=float(phonon_frequency(q, params)),
    )


def solve_forward_phase_match(k_signal: float, params: WaveguideParams) -> ModePair:
    """Co-propagating branch; with linear dispersions only q = 0 conserves energy."""
    raise DegenerateBranchError(
        "forward SBS is degenerate under linear dispersion: "
        f"v_g*q = v_a*q with v_g={params.v_g!r} != v_a={params.v_a!r} forces q = 0"
    )


def signal_wavenumber(omega_k: float, params: WaveguideParams) -> float:
    """Positive-branch wavenumber whose photon frequency is omega_k."""
    k = (omega_k - params.omega0) / params.v_g
    if not k > 0:
        raise ValueError(f"omega_k={omega_k!r} lies at or below omega0={params.omega0!r}")
    return k
