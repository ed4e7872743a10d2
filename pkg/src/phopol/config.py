"""Flat ``key = value`` run configuration.

Lines hold one assignment each; ``#`` starts a comment; numbers accept
scientific notation. An empty file gives the nanowire parameter set:
gamma=1e5, Gamma=1e6, u=1e6, g=1e4, omega_k=1e14, Omega_q=1e10,
omega_kq = omega_k - Omega_q and a resonant pump omega_p = omega_kq.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, fields
from typing import Optional

from .analysis import AXES, GEOMETRIES, KERNEL_MODES, SweepSpec
from .pump import PumpDrive, pump_steady_state
from .waveguide import (
    ModeFrequencies,
    ModePair,
    WaveguideParams,
    signal_wavenumber,
    solve_backward_phase_match,
)

FORMATS = ("csv", "json")


class ConfigError(ValueError):
    """Invalid configuration; ``where`` names the offending line or override."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.message = message


@dataclass(frozen=True)
class RunConfig:
    # waveguide
    omega0: float = 4.9995e13
    v_g: float = 1e8
    v_a: float = 1e4
    length_W: float = 1e-2
    gamma: float = 1e5
    Gamma: float = 1e6
    g: float = 1e4
    u: float = 1e6
    refractive_index_n: float = 3.48
    # modes; k_signal switches to phase-matched frequencies
    omega_k: float = 1e14
    Omega_q: float = 1e10
    omega_kq: Optional[float] = None
    k_signal: Optional[float] = None
    # pump
    omega_p: Optional[float] = None
    n_in: float = 1e8
    phase: float = 0.0
    # sweep
    geometry: str = "linear"
    axis: str = "probe_detuning"
    start: Optional[float] = None
    stop: Optional[float] = None
    points: Optional[int] = None
    probe_detuning: float = 0.0
    kernel: str = "auto"
    exact_eigen: bool = False
    regime_threshold: float = 0.5
    prominence: float = 0.01
    workers: int = 1
    # output
    out: Optional[str] = None
    format: str = "csv"

    def waveguide(self) -> WaveguideParams:
        return WaveguideParams(
            omega0=self.omega0, v_g=self.v_g, v_a=self.v_a, length_W=self.length_W,
            gamma=self.gamma, Gamma=self.Gamma, g=self.g, u=self.u,
            refractive_index_n=self.refractive_index_n,
        )

    def mode_pair(self) -> ModePair:
        params = self.waveguide()
        k = self.k_signal if self.k_signal is not None else signal_wavenumber(self.omega_k, params)
        return solve_backward_phase_match(k, params)

    def modes(self) -> ModeFrequencies:
        if self.k_signal is not None:
            return self.mode_pair().frequencies
        omega_kq = self.omega_kq if self.omega_kq is not None else self.omega_k - self.Omega_q
        return ModeFrequencies(self.omega_k, self.Omega_q, omega_kq)

    def drive(self) -> PumpDrive:
        omega_p = self.omega_p if self.omega_p is not None else self.modes().omega_kq
        return PumpDrive(omega_p=omega_p, n_in=self.n_in, phase=self.phase)

    def sweep_spec(self, axis: Optional[str] = None, geometry: Optional[str] = None) -> SweepSpec:
        axis = axis or self.axis
        start, stop, points = self.start, self.stop, self.points
        if axis == "probe_detuning":
            start = -2e7 if start is None else start
            stop = 2e7 if stop is None else stop
            points = 2001 if points is None else points
        elif axis == "polariton_detuning":
            if start is None or stop is None:
                modes, drive = self.modes(), self.drive()
                f = abs(pump_steady_state(modes.omega_kq, drive, self.waveguide()).f_eff)
                span = 10 * f if f > 0 else 1e7
                start = -span if start is None else start
                stop = span if stop is None else stop
            points = 1001 if points is None else points
        else:
            start = 0.0 if start is None else start
            stop = 1e11 if stop is None else stop
            points = 101 if points is None else points
        return SweepSpec(
            geometry=geometry or self.geometry, axis=axis, start=start, stop=stop,
            points=points, params=self.waveguide(), modes=self.modes(), drive=self.drive(),
            kernel=self.kernel, exact_eigen=self.exact_eigen,
            probe_detuning=self.probe_detuning, regime_threshold=self.regime_threshold,
            workers=self.workers,
        )


DEFAULTS = RunConfig()
_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}

_POSITIVE = {"v_g", "v_a", "length_W", "u", "k_signal", "regime_threshold", "refractive_index_n"}
_NON_NEGATIVE = {"gamma", "Gamma", "g", "n_in", "Omega_q"}
_CHOICES = {"geometry": GEOMETRIES, "axis": AXES, "kernel": KERNEL_MODES, "format": FORMATS}
_INTEGERS = {"points": 2, "workers": 1}
_STRINGS = {"out"}
_BOOLS = {"exact_eigen"}
_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


def _parse_value(key: str, raw: str, where: str):
    if key in _CHOICES:
        if raw not in _CHOICES[key]:
            raise ConfigError(where, f"{key} must be one of {', '.join(_CHOICES[key])}, got {raw!r}")
        return raw
    if key in _STRINGS:
        if not raw:
            raise ConfigError(where, f"{key} needs a value")
        return raw
    if key in _BOOLS:
        low = raw.lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ConfigError(where, f"{key} must be a boolean (true/false), got {raw!r}")
    if key in _INTEGERS:
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(where, f"{key}: cannot parse integer {raw!r}") from None
        if value < _INTEGERS[key]:
            raise ConfigError(where, f"{key} must be >= {_INTEGERS[key]}, got {value}")
        return value
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(where, f"{key}: cannot parse number {raw!r}") from None
    if not math.isfinite(value):
        raise ConfigError(where, f"{key} must be finite, got {raw!r}")
    if key in _POSITIVE and not value > 0:
        raise ConfigError(where, f"{key} must be > 0, got {raw}")
    if key in _NON_NEGATIVE and not value >= 0:
        raise ConfigError(where, f"{key} must be >= 0, got {raw}")
    if key == "prominence" and not 0 < value < 1:
        raise ConfigError(where, f"prominence must lie in (0, 1), got {raw}")
    return value


def _assignments(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        where = f"line {lineno}"
        if "=" not in body:
            raise ConfigError(where, f"expected 'key = value', got {body!r}")
        key, raw = (part.strip() for part in body.split("=", 1))
        yield where, key, raw


def _override_assignments(overrides):
    for i, item in enumerate(overrides, start=1):
        where = f"--set #{i}"
        if "=" not in item:
            raise ConfigError(where, f"expected key=value, got {item!r}")
        key, raw = (part.strip() for part in item.split("=", 1))
        yield where, key, raw


def parse_config(text: str = "", overrides=()) -> RunConfig:
    """Parse config text, then apply ``key=value`` overrides left to right."""
    values, origin = {}, {}
    for where, key, raw in [*_assignments(text), *_override_assignments(overrides)]:
        if key not in _FIELD_TYPES:
            raise ConfigError(where, f"unknown key {key!r}")
        values[key] = _parse_value(key, raw, where)
        origin[key] = where
    if values.get("k_signal") is not None:
        clash = sorted({"omega_k", "Omega_q", "omega_kq"} & values.keys())
        if clash:
            raise ConfigError(origin["k_signal"], f"k_signal fixes the mode frequencies; drop {', '.join(clash)}")
    cfg = dataclasses.replace(DEFAULTS, **values)
    _check_cross_field(cfg, origin)
    return cfg


def _check_cross_field(cfg: RunConfig, origin: dict) -> None:
    def where(*keys):
        for key in reversed(keys):
            if key in origin:
                return origin[key]
        return "defaults"

    if not cfg.v_g > cfg.v_a:
        raise ConfigError(where("v_g", "v_a"), f"v_g must exceed v_a (v_g={cfg.v_g!r}, v_a={cfg.v_a!r})")
    if cfg.start is not None and cfg.stop is not None and not cfg.start < cfg.stop:
        raise ConfigError(where("start", "stop"), f"start must be < stop ({cfg.start!r} >= {cfg.stop!r})")
    try:
        cfg.waveguide()
        cfg.drive()
        cfg.sweep_spec()
    except ValueError as exc:
        raise ConfigError("config", str(exc)) from None


def emit_config(cfg: RunConfig) -> str:
    """Serialize every non-None field; parse_config reads it back unchanged."""
    lines = []
    for f in fields(RunConfig):
        value = getattr(cfg, f.name)
        if value is None:
            continue
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = repr(value)
        else:
            text = str(value)
        lines.append(f"{f.name} = {text}")
    return "\n".join(lines) + "\n"
