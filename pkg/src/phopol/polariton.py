"""Upper/lower phonon-polariton branches of the linearized two-mode problem.

All functions broadcast over numpy arrays, so a whole detuning grid can be
diagonalized in one call. Branch "+" is always the higher real frequency.
At f = 0 the branches are the bare modes, and their photon/phonon character
swaps as delta crosses zero. The exactly degenerate point f = 0, delta = 0
takes the delta < 0 limit: "+" is the pure phonon, "-" the pure photon.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np


@dataclass(frozen=True)
class PolaritonInputs:
    """Rotating-frame signal frequency, phonon frequency, coupling f and dampings."""

    omega_bar: Any
    Omega_q: Any
    f: Any
    gamma: Any = 0.0
    Gamma: Any = 0.0

    def __post_init__(self):
        if np.any(np.asarray(self.gamma) < 0) or np.any(np.asarray(self.Gamma) < 0):
            raise ValueError("damping rates must be >= 0")

    def coupling_matrix(self) -> np.ndarray:
        """Hermitian part [[omega_bar, f], [conj f, Omega_q]] (scalar inputs only)."""
        f = complex(self.f)
        return np.array([[self.omega_bar, f], [f.conjugate(), self.Omega_q]], dtype=complex)

    def damped_matrix(self) -> np.ndarray:
        f = complex(self.f)
        return np.array(
            [
                [self.omega_bar - 0.5j * self.gamma, f],
                [f.conjugate(), self.Omega_q - 0.5j * self.Gamma],
            ],
            dtype=complex,
        )


@dataclass(frozen=True)
class Branch:
    """One polariton branch: A = X*b + Y*a."""

    X: Any
    Y: Any
    Omega: Any
    Gamma_eff: Any

    @property
    def Omega_complex(self):
        return self.Omega - 1j * self.Gamma_eff

    @property
    def phonon_fraction(self):
        return np.abs(self.X) ** 2

    @property
    def photon_fraction(self):
        return np.abs(self.Y) ** 2


@dataclass(frozen=True)
class PolaritonPair:
    plus: Branch
    minus: Branch
    delta: Any
    D: Any
    inputs: PolaritonInputs

    def complex_frequencies(self, exact: bool = False):
        """(Omega+ - i*Gamma+, Omega- - i*Gamma-), or the exact eigenvalues."""
        if exact:
            return exact_eigen_oracle(self.inputs)
        return self.plus.Omega_complex, self.minus.Omega_complex


def detuning_quantities(inputs: PolaritonInputs):
    """Half-detuning delta = (omega_bar - Omega_q)/2 and D = sqrt(delta^2 + |f|^2)."""
    delta = (np.asarray(inputs.omega_bar, dtype=float) - inputs.Omega_q) / 2
    D = np.hypot(delta, np.abs(inputs.f))
    return delta, D


def _branch_fractions(delta, D, abs_f):
    """Return ((D - delta)/2D, (D + delta)/2D) without cancellation.

    The smaller of the two is rewritten as |f|^2/(2D(D + |delta|)).
    """
    big = D + np.abs(delta)
    with np.errstate(invalid="ignore", divide="ignore"):
        major = big / (2 * D)
        # product of ratios avoids underflow of |f|^2 for tiny couplings
        minor = (abs_f / big) * (abs_f / (2 * D))
    degenerate = D == 0
    major = np.where(degenerate, 1.0, major)
    minor = np.where(degenerate, 0.0, minor)
    # delta <= 0: D - delta is the large one
    neg = delta <= 0
    d_minus = np.where(neg, major, minor)
    d_plus = np.where(neg, minor, major)
    return d_minus, d_plus


def mixing_amplitudes(inputs: PolaritonInputs):
    """Mixing amplitudes ((X+, Y+), (X-, Y-)).

    X+- = +-sqrt((D -+ delta)/2D),  Y+- = conj(f)/sqrt(2D(D -+ delta)),
    evaluated through the fraction form so that f -> 0 is a smooth limit.
    """
    delta, D = detuning_quantities(inputs)
    f = np.asarray(inputs.f, dtype=complex)
    abs_f = np.abs(f)
    d_minus, d_plus = _branch_fractions(delta, D, abs_f)
    phase = np.where(abs_f > 0, np.exp(-1j * np.angle(f)), 1.0 + 0j)
    X_plus = np.sqrt(d_minus) + 0j
    Y_plus = phase * np.sqrt(d_plus)
    X_minus = -np.sqrt(d_plus) + 0j
    Y_minus = phase * np.sqrt(d_minus)
    return (X_plus, Y_plus), (X_minus, Y_minus)


def polariton_frequencies(inputs: PolaritonInputs):
    """Omega+- = (omega_bar + Omega_q)/2 +- D."""
    _, D = detuning_quantities(inputs)
    center = (np.asarray(inputs.omega_bar, dtype=float) + inputs.Omega_q) / 2
    return center + D, center - D


def polariton_damping(X, Y, gamma, Gamma):
    """Gamma_eff = |X|^2*Gamma/2 + |Y|^2*gamma/2 for one branch."""
    return np.abs(X) ** 2 * Gamma / 2 + np.abs(Y) ** 2 * gamma / 2


def polariton_pair(inputs: PolaritonInputs) -> PolaritonPair:
    delta, D = detuning_quantities(inputs)
    (Xp, Yp), (Xm, Ym) = mixing_amplitudes(inputs)
    Op, Om = polariton_frequencies(inputs)
    return PolaritonPair(
        plus=Branch(Xp, Yp, Op, polariton_damping(Xp, Yp, inputs.gamma, inputs.Gamma)),
        minus=Branch(Xm, Ym, Om, polariton_damping(Xm, Ym, inputs.gamma, inputs.Gamma)),
        delta=delta,
        D=D,
        inputs=inputs,
    )


def exact_eigen_oracle(inputs: PolaritonInputs):
    """Exact eigenvalues of [[omega_bar - i*gamma/2, f], [conj f, Omega_q - i*Gamma/2]].

    lambda+- = center - i(gamma + Gamma)/4 +- sqrt(delta_c^2 + |f|^2) with
    delta_c = delta - i(gamma - Gamma)/4. The principal root has Re >= 0, so
    "+" carries the larger real part and matches the large-|f| labeling.
    """
    delta, _ = detuning_quantities(inputs)
    gamma = np.asarray(inputs.gamma, dtype=float)
    Gamma = np.asarray(inputs.Gamma, dtype=float)
    center = (np.asarray(inputs.omega_bar, dtype=float) + inputs.Omega_q) / 2 - 0.25j * (gamma + Gamma)
    delta_c = delta - 0.25j * (gamma - Gamma)
    s = np.sqrt(delta_c**2 + np.abs(inputs.f) ** 2 + 0j)
    return center + s, center - s


def fraction_sweep(delta_grid, Omega_q: float, f, gamma: float = 0.0, Gamma: float = 0.0) -> dict:
    """Branch frequencies and photon/phonon fractions over a half-detuning grid.

    The phonon frequency is held fixed and the rotating-frame signal frequency
    is moved, omega_bar = Omega_q + 2*delta.
    """
    delta_grid = np.asarray(delta_grid, dtype=float)
    if delta_grid.size == 0:
        raise ValueError("empty detuning grid")
    steps = np.diff(delta_grid)
    if not (np.all(steps > 0) or np.all(steps < 0)):
        raise ValueError("detuning grid must be strictly monotone")
    pair = polariton_pair(PolaritonInputs(Omega_q + 2 * delta_grid, Omega_q, f, gamma, Gamma))
    return {
        "delta": delta_grid,
        "omega_plus": pair.plus.Omega,
        "omega_minus": pair.minus.Omega,
        "x2_plus": pair.plus.phonon_fraction,
        "y2_plus": pair.plus.photon_fraction,
        "x2_minus": pair.minus.phonon_fraction,
        "y2_minus": pair.minus.photon_fraction,
        "gamma_plus": pair.plus.Gamma_eff,
        "gamma_minus": pair.minus.Gamma_eff,
    }
