import pytest

from shen_dn3.core import Modulus

STANDARD_MODULI = (0.1, 0.3, 0.5, 0.7, 0.9)

_criteria_lines: list[str] = []


@pytest.fixture(params=STANDARD_MODULI, ids=lambda k2: f"k2={k2}")
def std_mod(request):
    return Modulus.from_kappa2(request.param)


@pytest.fixture(scope="session")
def mod_half():
    return Modulus.from_kappa2(0.5)


@pytest.fixture
def record_criterion():
    """Record a one-line pass/fail verdict for the acceptance summary."""

    def record(label: str, passed: bool, detail: str) -> None:
        _criteria_lines.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criteria_lines:
            terminalreporter.write_line(line)
