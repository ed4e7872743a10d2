"""Classical, undepleted pump steady state and the pump-enhanced coupling f."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .waveguide import WaveguideParams


@dataclass(frozen=True)
class PumpDrive:
    """External pump: laser frequency [1/s], input flux n_in [1/s], phase [rad]."""

    omega_p: float
    n_in: float
    phase: float = 0.0

    def __post_init__(self):
        if not self.n_in >= 0:
            raise ValueError(f"n_in must be >= 0, got {self.n_in!r}")

    @property
    def alpha(self) -> complex:
        """Mean input pump amplitude sqrt(n_in)*exp(i*phase)."""
        return complex(np.sqrt(self.n_in) * np.exp(1j * self.phase))


@dataclass(frozen=True)
class PumpSteadyState:
    Delta: complex
    beta: complex
    n_pump: float
    f_eff: complex


def pump_detuning(omega_kq: float, drive: PumpDrive, params: WaveguideParams) -> complex:
    return complex(omega_kq - drive.omega_p, -(params.u + params.gamma / 2))


def _check_delta(Delta: complex) -> None:
    if Delta == 0:
        raise ZeroDivisionError("pump detuning Delta is zero (undamped exact resonance)")


def pump_steady_amplitude(Delta: complex, drive: PumpDrive, params: WaveguideParams) -> complex:
    """beta = sqrt(u)*alpha/(i*Delta)."""
    _check_delta(Delta)
    return complex(np.sqrt(params.u) * drive.alpha / (1j * Delta))


def intracavity_pump_number(Delta: complex, drive: PumpDrive, params: WaveguideParams) -> float:
    _check_delta(Delta)
    return float(params.u * drive.n_in / abs(Delta) ** 2)


def effective_coupling(Delta: complex, drive: PumpDrive, params: WaveguideParams) -> complex:
    """f = g*sqrt(u)*alpha/(i*Delta), the linearized photon-phonon coupling."""
    return params.g * pump_steady_amplitude(Delta, drive, params)


def pump_steady_state(omega_kq: float, drive: PumpDrive, params: WaveguideParams) -> PumpSteadyState:
    Delta = pump_detuning(omega_kq, drive, params)
    return PumpSteadyState(
        Delta=Delta,
        beta=pump_steady_amplitude(Delta, drive, params),
        n_pump=intracavity_pump_number(Delta, drive, params),
        f_eff=effective_coupling(Delta, drive, params),
    )
