"""Parameter sweeps, extremum search, Rabi-splitting measurement and invariant checks."""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.signal import find_peaks

from .polariton import PolaritonInputs, fraction_sweep, polariton_pair
from .pump import PumpDrive, effective_coupling, pump_detuning
from .spectra import (
    ProbeFrame,
    resolvent_kernel,
    response_kernel,
    spectrum_from_kernel,
)
from .waveguide import ModeFrequencies, WaveguideParams

GEOMETRIES = ("linear", "ring")
AXES = ("probe_detuning", "pump_intensity", "polariton_detuning")
KERNEL_MODES = ("auto", "polariton", "resolvent")

AXIS_COLUMN = {
    "probe_detuning": "detuning",
    "pump_intensity": "n_in",
    "polariton_detuning": "delta",
}

# Parallel chunks start on multiples of this many points, so every element
# meets the same SIMD body/tail split whatever the worker count.
_CHUNK_ALIGN = 512

UNITARITY_TOL = 1e-12
NORMALIZATION_TOL = 1e-12


class InsufficientPeaksError(ValueError):
    """Fewer than two maxima: no splitting to measure (weak coupling)."""


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a linear grid over ``axis`` with everything else fixed.

    ``start``/``stop`` are in 1/s except for ``pump_intensity``, where they
    are input pump fluxes. ``probe_detuning`` is the fixed probe offset
    omega_s - omega_k used by the pump-intensity axis.
    """

    geometry: str = "linear"
    axis: str = "probe_detuning"
    start: float = -2e7
    stop: float = 2e7
    points: int = 2001
    params: WaveguideParams = field(default_factory=WaveguideParams)
    modes: ModeFrequencies = field(default_factory=ModeFrequencies)
    drive: Optional[PumpDrive] = None
    kernel: str = "auto"
    exact_eigen: bool = False
    probe_detuning: float = 0.0
    regime_threshold: float = 0.5
    workers: int = 1

    def __post_init__(self):
        if self.drive is None:
            object.__setattr__(self, "drive", PumpDrive(omega_p=self.modes.omega_kq, n_in=1e8))
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"geometry must be one of {GEOMETRIES}, got {self.geometry!r}")
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if self.kernel not in KERNEL_MODES:
            raise ValueError(f"kernel must be one of {KERNEL_MODES}, got {self.kernel!r}")
        if not self.points >= 2:
            raise ValueError(f"points must be >= 2, got {self.points!r}")
        if not self.start < self.stop:
            raise ValueError(f"start must be < stop, got {self.start!r} >= {self.stop!r}")
        if self.axis == "pump_intensity" and self.start < 0:
            raise ValueError("pump intensity sweep must start at n_in >= 0")
        if not self.workers >= 1:
            raise ValueError(f"workers must be >= 1, got {self.workers!r}")
        if not self.regime_threshold > 0:
            raise ValueError("regime_threshold must be > 0")

    def axis_values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)

    def replace(self, **changes) -> "SweepSpec":
        return dataclasses.replace(self, **changes)


@dataclass
class SweepTable:
    """Tabulated sweep. ``columns`` holds one array per quantity, row-aligned
    with ``axis``; complex amplitudes are kept as complex arrays."""

    kind: str
    geometry: Optional[str]
    axis_name: str
    axis: np.ndarray
    columns: dict
    metadata: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.axis)

    def column(self, name: str) -> np.ndarray:
        if name == self.axis_name:
            return self.axis
        return self.columns[name]


@dataclass(frozen=True)
class Extremum:
    position: float
    height: float
    kind: str
    index: int


@dataclass
class InvariantReport:
    residuals: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, name: str, residual: float, tol: float) -> None:
        residual = float(residual)
        self.residuals[name] = residual
        self.tolerances[name] = tol
        if not residual <= tol:
            self.violations.append(f"{name}: residual {residual:.3e} exceeds {tol:.1e}")

    def merge(self, other: "InvariantReport", prefix: str) -> None:
        for name, value in other.residuals.items():
            self.residuals[f"{prefix}.{name}"] = value
            self.tolerances[f"{prefix}.{name}"] = other.tolerances[name]
        self.violations.extend(f"{prefix}.{v}" for v in other.violations)


def classify_regime(f, gamma: float, Gamma: float, threshold: float = 0.5):
    """'strong' when |f| exceeds threshold*max(gamma, Gamma), else 'weak'.

    The default threshold 0.5 compares |f| against the half-widths.
    """
    strong = np.abs(f) > threshold * max(gamma, Gamma)
    if np.ndim(strong) == 0:
        return "strong" if strong else "weak"
    return np.where(strong, "strong", "weak")


def _coupling(spec: SweepSpec, n_in):
    Delta = pump_detuning(spec.modes.omega_kq, spec.drive, spec.params)

    def f_at(flux):
        return effective_coupling(Delta, dataclasses.replace(spec.drive, n_in=float(flux)), spec.params)

    if np.ndim(n_in) == 0:
        return f_at(n_in)
    return np.array([f_at(flux) for flux in n_in], dtype=complex)


def _kernel(spec: SweepSpec, pair, omega_frame, strong):
    mode = spec.kernel
    if mode == "resolvent":
        return resolvent_kernel(pair.inputs, omega_frame)
    polariton = response_kernel(pair, omega_frame, exact=spec.exact_eigen)
    if mode == "polariton":
        return polariton
    return np.where(strong, polariton, resolvent_kernel(pair.inputs, omega_frame))


def _chunks(n: int, workers: int):
    blocks = max(1, -(-n // _CHUNK_ALIGN))
    per = -(-blocks // min(workers, blocks))
    edges = list(range(0, n, per * _CHUNK_ALIGN)) + [n]
    return [(a, b) for a, b in zip(edges[:-1], edges[1:])]


def _spectrum_chunk(spec: SweepSpec, axis: np.ndarray) -> dict:
    p, m = spec.params, spec.modes
    if spec.axis == "probe_detuning":
        f = _coupling(spec, spec.drive.n_in)
        detuning = axis
    else:
        f = _coupling(spec, axis)
        detuning = np.full_like(axis, spec.probe_detuning)
    pair = polariton_pair(PolaritonInputs(m.omega_bar, m.Omega_q, f, p.gamma, p.Gamma))
    probe = ProbeFrame.from_detuning(detuning, m.omega_k, m.omega_kq)
    strong = np.abs(f) > spec.regime_threshold * max(p.gamma, p.Gamma)
    Lambda = _kernel(spec, pair, probe.omega_frame, strong)
    point = spectrum_from_kernel(spec.geometry, Lambda, p.u, strict=False)
    cols = {"T": point.T, "A": point.A, "phi_t": point.phi_t, "t": point.t,
            "Lambda": point.Lambda, "flag": point.flag}
    if spec.geometry == "linear":
        cols.update(R=point.R, phi_r=point.phi_r, r=point.r)
    if spec.axis == "pump_intensity":
        cols["f_abs"] = np.abs(f)
        cols["strong"] = strong
    return {k: np.broadcast_to(v, axis.shape).copy() for k, v in cols.items()}


def _fraction_chunk(spec: SweepSpec, axis: np.ndarray) -> dict:
    p, m = spec.params, spec.modes
    f = _coupling(spec, spec.drive.n_in)
    cols = fraction_sweep(axis, m.Omega_q, f, p.gamma, p.Gamma)
    cols.pop("delta")
    return cols


def _metadata(spec: SweepSpec) -> dict:
    p = spec.params
    meta = {
        "params": dataclasses.asdict(p),
        "modes": dataclasses.asdict(spec.modes),
        "drive": dataclasses.asdict(spec.drive),
        "axis": spec.axis,
        "points": spec.points,
        "kernel": spec.kernel,
        "exact_eigen": spec.exact_eigen,
        "regime_threshold": spec.regime_threshold,
    }
    if spec.axis == "pump_intensity":
        meta["regime"] = "mixed"
        meta["probe_detuning"] = spec.probe_detuning
    else:
        f = complex(_coupling(spec, spec.drive.n_in))
        meta["f_abs"] = abs(f)
        meta["regime"] = classify_regime(f, p.gamma, p.Gamma, spec.regime_threshold)
        if spec.kernel == "auto" and spec.axis == "probe_detuning":
            meta["kernel_used"] = "polariton" if meta["regime"] == "strong" else "resolvent"
    return meta


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the sweep; rows come back in axis order for any worker count.

    Points where the response is degenerate keep their row with flag=True.
    """
    axis = spec.axis_values()
    fractions = spec.axis == "polariton_detuning"
    evaluate = _fraction_chunk if fractions else _spectrum_chunk
    spans = _chunks(len(axis), spec.workers)
    if len(spans) == 1:
        parts = [evaluate(spec, axis)]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            parts = list(pool.map(lambda ab: evaluate(spec, axis[ab[0]:ab[1]]), spans))
    columns = {k: np.concatenate([part[k] for part in parts]) for k in parts[0]}
    return SweepTable(
        kind="fractions" if fractions else "spectrum",
        geometry=None if fractions else spec.geometry,
        axis_name=AXIS_COLUMN[spec.axis],
        axis=axis,
        columns=columns,
        metadata=_metadata(spec),
    )


def _parabolic_vertex(x, y, i):
    """Vertex of the parabola through points i-1, i, i+1 (x shifted to x[i])."""
    x0, x2 = x[i - 1] - x[i], x[i + 1] - x[i]
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = x0 * x2 * (x0 - x2)
    a = (x2 * (y0 - y1) - x0 * (y2 - y1)) / denom
    b = (x0**2 * (y2 - y1) - x2**2 * (y0 - y1)) / denom
    if a == 0 or not np.isfinite(a):
        return x[i], y1
    xv = -b / (2 * a)
    if not x0 <= xv <= x2:
        return x[i], y1
    return x[i] + xv, y1 - b**2 / (4 * a)


def find_extrema(table: SweepTable, column: str, prominence: float = 0.01,
                 kinds=("max", "min")) -> list:
    """Interior maxima/minima of a column, refined by 3-point parabolic fits.

    ``prominence`` is a fraction of the column's full range; flagged rows are
    skipped. Returns Extremum records sorted by axis position.
    """
    if len(table) == 0:
        raise ValueError("empty table")
    if not 0 < prominence < 1:
        raise ValueError(f"prominence must lie in (0, 1), got {prominence!r}")
    x = np.asarray(table.axis, dtype=float)
    y = np.asarray(table.column(column), dtype=float)
    keep = np.isfinite(y)
    if "flag" in table.columns:
        keep &= ~np.asarray(table.columns["flag"], dtype=bool)
    x, y = x[keep], y[keep]
    if len(y) < 3:
        return []
    span = float(np.ptp(y))
    if span == 0:
        return []
    found = []
    for kind, sign in (("max", 1.0), ("min", -1.0)):
        if kind not in kinds:
            continue
        idx, _ = find_peaks(sign * y, prominence=prominence * span)
        for i in idx:
            xv, yv = _parabolic_vertex(x, y, int(i))
            found.append(Extremum(float(xv), float(yv), kind, int(i)))
    return sorted(found, key=lambda e: e.position)


def measure_splitting(extrema) -> float:
    """Separation of the two tallest maxima."""
    maxima = sorted((e for e in extrema if e.kind == "max"), key=lambda e: e.height, reverse=True)
    if len(maxima) < 2:
        raise InsufficientPeaksError(
            f"found {len(maxima)} maximum(s); a splitting needs two (weak coupling?)"
        )
    return abs(maxima[0].position - maxima[1].position)


def _max_abs(values) -> float:
    values = np.asarray(values)
    return float(np.max(np.abs(values))) if values.size else 0.0


def _valid_rows(table: SweepTable) -> np.ndarray:
    flag = table.columns.get("flag")
    if flag is None:
        return np.ones(len(table), dtype=bool)
    return ~np.asarray(flag, dtype=bool)


def _excursion(values) -> float:
    """Largest distance of any value outside [0, 1]."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return 0.0
    return float(max(0.0, -values.min(), values.max() - 1.0))


def verify_invariants(table: SweepTable, paired: Optional[SweepTable] = None,
                      tol: float = UNITARITY_TOL) -> InvariantReport:
    """Worst-case residuals of every identity the table's columns must obey.

    ``paired`` is the other-geometry table of an otherwise identical sweep;
    when given, ring t and linear r must agree exactly.
    """
    report = InvariantReport()
    ok = _valid_rows(table)
    c = {k: np.asarray(v)[ok] for k, v in table.columns.items()}
    if table.kind == "fractions":
        report.record("normalization_plus", _max_abs(c["x2_plus"] + c["y2_plus"] - 1), NORMALIZATION_TOL)
        report.record("normalization_minus", _max_abs(c["x2_minus"] + c["y2_minus"] - 1), NORMALIZATION_TOL)
        report.record("completeness", _max_abs(c["x2_plus"] + c["x2_minus"] - 1), NORMALIZATION_TOL)
        order = np.asarray(c["omega_minus"] - c["omega_plus"], dtype=float)
        report.record("branch_order", max(0.0, float(order.max())) if order.size else 0.0, 0.0)
        return report

    if table.geometry == "linear":
        report.record("unitarity", _max_abs(c["T"] + c["R"] + c["A"] - 1), tol)
        report.record("passivity", max(_excursion(c["R"]), _excursion(c["T"]), _excursion(c["A"])), tol)
        report.record("t_equals_1_plus_r", _max_abs(c["t"] - (1 + c["r"])), tol)
        report.record("R_matches_r", _max_abs(c["R"] - np.abs(c["r"]) ** 2), tol)
        report.record("amplitude_bound", max(0.0, _max_abs(c["r"]) - 1, _max_abs(c["t"]) - 1), tol)
    else:
        report.record("unitarity", _max_abs(c["T"] + c["A"] - 1), tol)
        report.record("passivity", max(_excursion(c["T"]), _excursion(c["A"])), tol)
        report.record("amplitude_bound", max(0.0, _max_abs(c["t"]) - 1), tol)
    report.record("T_matches_t", _max_abs(c["T"] - np.abs(c["t"]) ** 2), tol)

    if paired is not None:
        ring, linear = (table, paired) if table.geometry == "ring" else (paired, table)
        if ring.geometry != "ring" or linear.geometry != "linear":
            raise ValueError("duality check needs one ring and one linear table")
        if not np.array_equal(ring.axis, linear.axis):
            raise ValueError("paired tables must share the same axis")
        diff = ring.columns["t"] - linear.columns["r"]
        finite = np.isfinite(diff)
        report.record("ring_linear_duality", _max_abs(diff[finite]), 0.0)
    return report
