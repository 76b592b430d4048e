import pytest

from garside import systems

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def xyz():
    return systems.example_xyz()


@pytest.fixture(scope="session")
def braid3():
    return systems.braid_classical(3)


@pytest.fixture(scope="session")
def braid4():
    return systems.braid_classical(4)


@pytest.fixture(scope="session")
def dual3():
    return systems.braid_dual(3)


@pytest.fixture(scope="session")
def dual4():
    return systems.braid_dual(4)


@pytest.fixture(scope="session")
def abelian3():
    return systems.free_abelian(3)


@pytest.fixture(scope="session")
def record_acceptance():
    def record(number: int, passed: bool, detail: str = "") -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
