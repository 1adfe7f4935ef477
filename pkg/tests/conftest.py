import pytest

from hochschild.catalog import instantiate, verification_runs

from randalg import random_corpus

RUNS = verification_runs()


def run_id(run):
    name, alpha = run
    return name if alpha is None else f"{name}[{alpha}]"


@pytest.fixture(scope="session")
def catalog_algebras():
    return [instantiate(name, alpha) for name, alpha in RUNS]


@pytest.fixture(scope="session")
def random_algebras():
    return random_corpus(100)


_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA[label] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in _CRITERIA.items():
        terminalreporter.write_line(f"{verdict}  {label}")
