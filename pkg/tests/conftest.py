import pytest

from sylowbranch import oracle
from sylowbranch.trees import enumerate_descriptors


@pytest.fixture(scope="session")
def sweep25():
    """Multiplicity vectors of every character of P_25 against every partition of 25."""
    eng = oracle.engine(25)
    thetas = list(enumerate_descriptors(5, 25))
    return eng, {theta: eng.mults(theta) for theta in thetas}


CRITERIA: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    holder = {}

    def start(number: int, title: str):
        holder["line"] = (number, title)

    yield start
    if "line" in holder:
        number, title = holder["line"]
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
        line = f"{'FAIL' if failed else 'PASS'} criterion {number}: {title}"
        CRITERIA.append(line)
        print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
