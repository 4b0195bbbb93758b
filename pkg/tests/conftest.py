import re

_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.failed:
        _outcomes[k] = "FAIL"
    elif report.when == "call" and report.passed:
        _outcomes.setdefault(k, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k, name in CRITERIA.items():
        terminalreporter.write_line(f"criterion {k} [{name}]: {_outcomes.get(k, 'NOT RUN')}")
