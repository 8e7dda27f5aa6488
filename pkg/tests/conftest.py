import pytest

from etaheat.ball import BallConfig, enumerate_spectrum


@pytest.fixture(scope="session")
def spec4():
    """m=4, eps=0.1 spectrum up to mu=40."""
    return enumerate_spectrum(BallConfig(4, 0.1, 40.0))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
