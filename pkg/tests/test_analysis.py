import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phopol.analysis import (
    Extremum,
    InsufficientPeaksError,
    SweepSpec,
    SweepTable,
    classify_regime,
    find_extrema,
    measure_splitting,
    run_sweep,
    verify_invariants,
)
from phopol.pump import PumpDrive
from phopol.waveguide import ModeFrequencies, WaveguideParams

MODES = ModeFrequencies()


def drive(n_in):
    return PumpDrive(omega_p=MODES.omega_kq, n_in=n_in)


def spectrum(n_in=1e8, geometry="linear", **kw):
    return run_sweep(SweepSpec(geometry=geometry, drive=drive(n_in), **kw))


def table_of(y, x=None):
    y = np.asarray(y, dtype=float)
    x = np.arange(len(y), dtype=float) if x is None else np.asarray(x, dtype=float)
    return SweepTable("spectrum", "linear", "detuning", x, {"T": y})


def splitting(n_in, params=None, points=4001):
    spec = SweepSpec(drive=drive(n_in), points=points, params=params or WaveguideParams())
    table = run_sweep(spec)
    return measure_splitting(find_extrema(table, "T")), table.metadata["f_abs"]


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(start=1.0, stop=0.0)
    with pytest.raises(ValueError):
        SweepSpec(points=1)
    with pytest.raises(ValueError):
        SweepSpec(geometry="triangle")
    with pytest.raises(ValueError):
        SweepSpec(axis="pump_intensity", start=-1.0, stop=1e11)
    with pytest.raises(ValueError):
        SweepSpec(workers=0)


def test_weak_sweep_has_single_centre_peak():
    table = spectrum(1e8)
    assert table.metadata["regime"] == "weak"
    assert table.metadata["kernel_used"] == "resolvent"
    maxima = [e for e in find_extrema(table, "T") if e.kind == "max"]
    assert len(maxima) == 1
    assert abs(maxima[0].position) < 2e4
    assert maxima[0].height == pytest.approx(0.876482325139537, rel=1e-6)


def test_strong_sweep_splits():
    table = spectrum(1e11)
    assert table.metadata["regime"] == "strong"
    extrema = find_extrema(table, "T")
    maxima = [e for e in extrema if e.kind == "max"]
    minima = [e for e in extrema if e.kind == "min"]
    assert len(maxima) == 2
    assert maxima[0].position == pytest.approx(-maxima[1].position, rel=1e-6)
    assert minima[0].position == pytest.approx(0.0, abs=1e3)
    assert minima[0].height == pytest.approx(8.52076868786e-4, rel=1e-3)


def test_ring_sweep_matches_linear_reflection():
    lin, ring = spectrum(1e11), spectrum(1e11, "ring")
    np.testing.assert_array_equal(ring.columns["T"], lin.columns["R"])
    report = verify_invariants(lin, paired=ring)
    assert report.ok, report.violations


def test_pump_intensity_axis():
    table = run_sweep(SweepSpec(axis="pump_intensity", start=0.0, stop=1e11, points=11, drive=drive(1e8)))
    assert table.axis_name == "n_in"
    f = table.columns["f_abs"]
    np.testing.assert_allclose(f[1:], f[-1] * np.sqrt(table.axis[1:] / 1e11), rtol=1e-12)
    assert not table.columns["strong"][0] and table.columns["strong"][-1]
    assert table.metadata["regime"] == "mixed"


def test_fraction_sweep_table():
    spec = SweepSpec(axis="polariton_detuning", start=-3e7, stop=3e7, points=1001, drive=drive(1e11))
    table = run_sweep(spec)
    assert table.kind == "fractions" and table.axis_name == "delta"
    assert verify_invariants(table).ok


def test_worker_count_does_not_change_results():
    base = SweepSpec(drive=drive(1e11), points=3001)
    one = run_sweep(base)
    four = run_sweep(base.replace(workers=4))
    for key in one.columns:
        np.testing.assert_array_equal(one.columns[key], four.columns[key])


def test_extrema_of_parabola_refined_exactly():
    x = np.linspace(-1.0, 1.0, 21)
    y = 1 - (x - 0.033) ** 2
    (peak,) = find_extrema(table_of(y, x), "T")
    assert peak.kind == "max"
    assert peak.position == pytest.approx(0.033, abs=1e-12)
    assert peak.height == pytest.approx(1.0, abs=1e-12)


def test_monotone_column_has_no_extrema():
    assert find_extrema(table_of(np.linspace(0.0, 1.0, 50)), "T") == []
    assert find_extrema(table_of(np.ones(50)), "T") == []


def test_prominence_filters_ripples():
    x = np.linspace(0, 10, 1001)
    y = np.exp(-((x - 5) ** 2)) + 1e-4 * np.sin(40 * x)
    maxima = [e for e in find_extrema(table_of(y, x), "T") if e.kind == "max"]
    assert len(maxima) == 1


def test_find_extrema_argument_checks():
    with pytest.raises(ValueError):
        find_extrema(table_of([]), "T")
    with pytest.raises(ValueError):
        find_extrema(table_of([0.0, 1.0, 0.0]), "T", prominence=0.0)


def test_splitting_needs_two_maxima():
    with pytest.raises(InsufficientPeaksError):
        measure_splitting([Extremum(0.0, 1.0, "max", 0)])
    peaks = [Extremum(-2.0, 0.5, "max", 0), Extremum(0.0, 0.1, "min", 1),
             Extremum(1.0, 0.2, "max", 2), Extremum(3.0, 0.6, "max", 3)]
    assert measure_splitting(peaks) == 5.0


def test_uncoupled_sweep_has_no_splitting():
    table = spectrum(0.0)
    assert table.metadata["f_abs"] == 0.0
    with pytest.raises(InsufficientPeaksError):
        measure_splitting(find_extrema(table, "T"))


def test_splitting_scales_with_square_root_of_pump():
    s1, f1 = splitting(1e11)
    s2, f2 = splitting(2e11)
    assert f2 / f1 == pytest.approx(np.sqrt(2), rel=1e-12)
    assert s2 / s1 == pytest.approx(np.sqrt(2), rel=1e-2)


def test_splitting_approaches_twice_coupling_as_damping_falls():
    excess = []
    for scale in (1.0, 0.3, 0.1, 0.03):
        params = WaveguideParams(gamma=1e5 * scale, Gamma=1e6 * scale)
        s, f = splitting(1e11, params, points=8001)
        excess.append(s / (2 * f) - 1)
    assert all(e > 0 for e in excess)
    assert all(np.diff(excess) < 0)
    assert excess[-1] < 1e-3


def test_classify_regime():
    assert classify_regime(3e6, 1e5, 1e6) == "strong"
    assert classify_regime(9.5e4, 1e5, 1e6) == "weak"
    assert classify_regime(5e5, 1e5, 1e6) == "weak"
    assert classify_regime(5e5, 1e5, 1e6, threshold=0.4) == "strong"
    assert list(classify_regime(np.array([1e4, 1e7]), 1e5, 1e6)) == ["weak", "strong"]


def test_invariants_catch_corruption():
    table = spectrum(1e11)
    assert verify_invariants(table).ok
    bad = dataclasses.replace(table, columns={**table.columns, "T": table.columns["T"] * 1.01})
    report = verify_invariants(bad)
    assert not report.ok
    assert any(v.startswith("unitarity") for v in report.violations)


def test_duality_requires_matching_tables():
    lin = spectrum(1e11)
    with pytest.raises(ValueError):
        verify_invariants(lin, paired=lin)


def test_undamped_poles_are_flagged_not_dropped():
    params = WaveguideParams(gamma=0.0, Gamma=0.0)
    table = run_sweep(SweepSpec(params=params, drive=drive(0.0), start=-1e6, stop=1e6, points=5, kernel="polariton"))
    assert len(table) == 5
    assert list(table.columns["flag"]) == [False, False, True, False, False]
    assert verify_invariants(table).ok


@settings(max_examples=25, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=1e12),
    st.floats(min_value=1e3, max_value=1e7),
    st.sampled_from(["linear", "ring"]),
    st.sampled_from(["auto", "polariton", "resolvent"]),
)
def test_sweeps_always_satisfy_invariants(n_in, gamma, geometry, kernel):
    params = WaveguideParams(gamma=gamma)
    table = run_sweep(SweepSpec(geometry=geometry, params=params, drive=drive(n_in), points=201, kernel=kernel))
    report = verify_invariants(table)
    assert report.ok, report.violations
