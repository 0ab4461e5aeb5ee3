import re

_criteria = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if m and (report.when == "call" or report.failed):
        key = int(m.group(1))
        ok = report.passed and _criteria.get(key, (True,))[0]
        _criteria[key] = (ok, m.group(2).replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        ok, name = _criteria[key]
        terminalreporter.write_line(f"criterion {key:2d} {'PASS' if ok else 'FAIL'}  {name}")
