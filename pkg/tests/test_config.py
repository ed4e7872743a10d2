import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phopol.config import DEFAULTS, ConfigError, RunConfig, emit_config, parse_config


def test_empty_config_gives_defaults():
    cfg = parse_config("")
    assert cfg == DEFAULTS
    assert (cfg.gamma, cfg.Gamma, cfg.u, cfg.g) == (1e5, 1e6, 1e6, 1e4)
    modes = cfg.modes()
    assert modes.omega_kq == 1e14 - 1e10
    assert cfg.drive().omega_p == modes.omega_kq


def test_assignments_and_comments():
    cfg = parse_config("# strong pump\nn_in = 1e11   # photons/s\n\ngeometry=ring\n")
    assert cfg.n_in == 1e11
    assert cfg.geometry == "ring"


def test_sweep_spec_defaults_per_axis():
    cfg = parse_config("n_in = 1e11")
    spec = cfg.sweep_spec()
    assert (spec.start, spec.stop, spec.points) == (-2e7, 2e7, 2001)
    frac = cfg.sweep_spec(axis="polariton_detuning")
    assert frac.stop == pytest.approx(10 * 3011693.0096841708, rel=1e-12)
    pump = cfg.sweep_spec(axis="pump_intensity")
    assert (pump.start, pump.stop, pump.points) == (0.0, 1e11, 101)


def test_phase_matched_modes():
    cfg = parse_config("k_signal = 500050")
    modes = cfg.modes()
    assert modes.Omega_q == pytest.approx(1e10, rel=1e-12)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("gamma = -1", "gamma must be >= 0"),
        ("colour = red", "unknown key 'colour'"),
        ("u = fast", "cannot parse number"),
        ("u = 0", "u must be > 0"),
        ("points = 1", "points must be >= 2"),
        ("points = 2.5", "cannot parse integer"),
        ("geometry = triangle", "geometry must be one of"),
        ("exact_eigen = maybe", "boolean"),
        ("n_in = nan", "finite"),
        ("prominence = 1.5", "prominence"),
        ("just some words", "expected 'key = value'"),
        ("v_g = 1e3", "v_g must exceed v_a"),
        ("start = 5\nstop = 1", "start must be < stop"),
        ("k_signal = 5e5\nomega_k = 1e14", "k_signal fixes"),
    ],
)
def test_bad_configs_are_rejected(text, fragment):
    with pytest.raises(ConfigError, match=fragment):
        parse_config(text)


def test_error_names_the_line():
    with pytest.raises(ConfigError) as info:
        parse_config("n_in = 1e9\n\ngamma = -1\n")
    assert info.value.where == "line 3"


def test_overrides_apply_in_order():
    cfg = parse_config("n_in = 1e9", ["n_in=1e10", "n_in=1e11"])
    assert cfg.n_in == 1e11
    with pytest.raises(ConfigError) as info:
        parse_config("", ["n_in=1", "gamma=-2"])
    assert info.value.where == "--set #2"


def test_round_trip_of_defaults_and_edits():
    for cfg in (DEFAULTS, parse_config("n_in = 1e11\nexact_eigen = true\nstart = -1e6\nstop = 3e6\npoints = 7\nout = x.csv")):
        assert parse_config(emit_config(cfg)) == cfg


@settings(max_examples=100)
@given(
    st.floats(min_value=0.0, max_value=1e14),
    st.floats(min_value=0.0, max_value=1e8),
    st.sampled_from(["linear", "ring"]),
    st.integers(min_value=2, max_value=10_000),
)
def test_round_trip_property(n_in, gamma, geometry, points):
    cfg = RunConfig(n_in=n_in, gamma=gamma, geometry=geometry, points=points)
    assert parse_config(emit_config(cfg)) == cfg
