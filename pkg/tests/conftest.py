import pytest

from phopol.pump import PumpDrive
from phopol.waveguide import ModeFrequencies, WaveguideParams

# (criterion, description, passed, detail) rows reported after the run
ACCEPTANCE_RESULTS = []


@pytest.fixture
def params():
    """gamma=1e5, Gamma=1e6, u=1e6, g=1e4 (all 1/s)."""
    return WaveguideParams()


@pytest.fixture
def modes():
    return ModeFrequencies()


@pytest.fixture
def weak_drive(modes):
    return PumpDrive(omega_p=modes.omega_kq, n_in=1e8)


@pytest.fixture
def strong_drive(modes):
    return PumpDrive(omega_p=modes.omega_kq, n_in=1e11)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] C{number:<2d} {description}: {detail}")
