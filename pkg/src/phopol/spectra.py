"""Probe response of linear (two-mirror) and ring (fiber-coupled) waveguides.

The kernel is evaluated in the frame rotating at the pump mode frequency,
omega = omega_s - omega_kq; spectra are reported against omega_s - omega_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .polariton import PolaritonInputs, PolaritonPair

KERNELS = ("polariton", "resolvent")


class DegenerateResponseError(ArithmeticError):
    """The probe sits on an undamped pole or 1 - i*u*Lambda vanishes."""


@dataclass(frozen=True)
class ProbeFrame:
    omega_probe_lab: Any
    omega_frame: Any
    detuning_signal: Any

    @classmethod
    def from_detuning(cls, detuning, omega_k: float, omega_kq: float) -> "ProbeFrame":
        """Build the frame from omega_s - omega_k without forming omega_s - omega_kq
        from two ~1e14 numbers."""
        detuning = np.asarray(detuning, dtype=float)
        return cls(
            omega_probe_lab=omega_k + detuning,
            omega_frame=(omega_k - omega_kq) + detuning,
            detuning_signal=detuning,
        )


@dataclass(frozen=True)
class SpectrumPoint:
    """Probe response; fields are scalars or equally shaped arrays.

    Ring geometry leaves r, R and phi_r as None.
    """

    geometry: str
    Lambda: Any
    t: Any
    T: Any
    A: Any
    phi_t: Any
    r: Optional[Any] = None
    R: Optional[Any] = None
    phi_r: Optional[Any] = None
    flag: Optional[Any] = None


def _phase(z):
    # np.angle maps a negative-zero imaginary part to -pi; fold into (-pi, pi]
    phi = np.angle(z)
    return np.where(phi == -np.pi, np.pi, phi)


def response_kernel(pair: PolaritonPair, omega_frame, exact: bool = False):
    """Lambda = sum over branches of |Y|^2/(Omega_complex - omega)."""
    w_plus, w_minus = pair.complex_frequencies(exact=exact)
    omega = np.asarray(omega_frame, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        return (
            pair.plus.photon_fraction / (w_plus - omega)
            + pair.minus.photon_fraction / (w_minus - omega)
        )


def resolvent_kernel(inputs: PolaritonInputs, omega_frame):
    """Photon element of (M - omega)^-1 for the damped two-mode matrix M.

    This is the kernel the polariton sum approximates; it needs no
    diagonalization and stays valid when |f| is below the damping rates.
    """
    omega = np.asarray(omega_frame, dtype=float)
    photon = inputs.omega_bar - 0.5j * inputs.gamma - omega
    phonon = inputs.Omega_q - 0.5j * inputs.Gamma - omega
    with np.errstate(divide="ignore", invalid="ignore"):
        return phonon / (photon * phonon - np.abs(inputs.f) ** 2)


def kernel_values(pair: PolaritonPair, omega_frame, kernel: str = "polariton", exact: bool = False):
    if kernel == "polariton":
        return response_kernel(pair, omega_frame, exact=exact)
    if kernel == "resolvent":
        return resolvent_kernel(pair.inputs, omega_frame)
    raise ValueError(f"unknown kernel {kernel!r}; expected one of {KERNELS}")


def _denominator(Lambda, u):
    return 1 - 1j * u * Lambda


def _bad_points(Lambda, den):
    return ~np.isfinite(Lambda) | ~np.isfinite(den) | (den == 0)


def _raise_if_degenerate(bad) -> None:
    if np.any(bad):
        n = int(np.count_nonzero(bad))
        raise DegenerateResponseError(
            f"{n} probe point(s) hit an undamped pole or a vanishing 1 - i*u*Lambda"
        )


def reflection_amplitude(Lambda, u):
    """-1/(1 - i*u*Lambda): linear-geometry r and ring-geometry t alike."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return -1 / _denominator(Lambda, u)


def linear_amplitudes(Lambda, u, strict: bool = True):
    """(r, t) of the two-mirror waveguide; t = 1 + r identically."""
    den = _denominator(Lambda, u)
    if strict:
        _raise_if_degenerate(_bad_points(Lambda, den))
    with np.errstate(divide="ignore", invalid="ignore"):
        t = -1j * u * Lambda / den
    return reflection_amplitude(Lambda, u), t


def _linear_from_kernel(Lambda, u, bad) -> SpectrumPoint:
    den = _denominator(Lambda, u)
    r, t = linear_amplitudes(Lambda, u, strict=False)
    with np.errstate(divide="ignore", invalid="ignore"):
        den2 = np.abs(den) ** 2
        R = 1 / den2
        T = u**2 * np.abs(Lambda) ** 2 / den2
        A = np.real(1j * u * (np.conj(Lambda) - Lambda)) / den2
    return SpectrumPoint(
        geometry="linear", Lambda=Lambda, t=t, T=T, A=A, phi_t=_phase(t),
        r=r, R=R, phi_r=_phase(r), flag=bad,
    )


def _ring_from_kernel(Lambda, u, bad) -> SpectrumPoint:
    # A = (|1 - i*u*Lambda|^2 - 1)/|1 - i*u*Lambda|^2, the power the ring removes
    den = _denominator(Lambda, u)
    t = reflection_amplitude(Lambda, u)
    with np.errstate(divide="ignore", invalid="ignore"):
        den2 = np.abs(den) ** 2
        T = 1 / den2
        A = (2 * u * np.imag(Lambda) + u**2 * np.abs(Lambda) ** 2) / den2
    return SpectrumPoint(geometry="ring", Lambda=Lambda, t=t, T=T, A=A, phi_t=_phase(t), flag=bad)


def spectrum_from_kernel(geometry: str, Lambda, u: float, strict: bool = True) -> SpectrumPoint:
    """R, T, A and phases for a precomputed kernel value (or array of them)."""
    Lambda = np.asarray(Lambda, dtype=complex)
    bad = _bad_points(Lambda, _denominator(Lambda, u))
    if strict:
        _raise_if_degenerate(bad)
    if geometry == "linear":
        return _linear_from_kernel(Lambda, u, bad)
    if geometry == "ring":
        return _ring_from_kernel(Lambda, u, bad)
    raise ValueError(f"unknown geometry {geometry!r}; expected 'linear' or 'ring'")


def linear_spectrum_point(pair: PolaritonPair, probe: ProbeFrame, u: float, exact: bool = False,
                          strict: bool = True, kernel: str = "polariton") -> SpectrumPoint:
    Lambda = kernel_values(pair, probe.omega_frame, kernel, exact)
    return spectrum_from_kernel("linear", Lambda, u, strict)


def ring_spectrum_point(pair: PolaritonPair, probe: ProbeFrame, u: float, exact: bool = False,
                        strict: bool = True, kernel: str = "polariton") -> SpectrumPoint:
    """Fiber transmission past a ring; t is the linear geometry's r."""
    Lambda = kernel_values(pair, probe.omega_frame, kernel, exact)
    return spectrum_from_kernel("ring", Lambda, u, strict)


def spectrum_point(geometry: str, pair: PolaritonPair, probe: ProbeFrame, u: float,
                   exact: bool = False, strict: bool = True, kernel: str = "polariton") -> SpectrumPoint:
    Lambda = kernel_values(pair, probe.omega_frame, kernel, exact)
    return spectrum_from_kernel(geometry, Lambda, u, strict)
