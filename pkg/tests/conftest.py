from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if getattr(rep, "wasxfail", None) is not None:
            verdict = "FAIL (expected: " + rep.wasxfail + ")"
        else:
            verdict = "PASS" if rep.passed else "FAIL"
        prev = _criteria.get(n)
        # a criterion split over several tests passes only if all parts do
        if prev is None or prev[1] == "PASS":
            _criteria[n] = (title, verdict)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, verdict = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d} {verdict.split(' ')[0]:4s} {title}"
                                    + (verdict[4:] if verdict.startswith("FAIL ") else ""))
