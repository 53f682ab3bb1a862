import pytest

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number = mark.args[0]
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    prev = _CRITERIA.get(number)
    passed = report.passed and (prev is None or prev[0])
    duration = report.duration + (prev[2] if prev else 0.0)
    _CRITERIA[number] = (passed, title, duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, title, duration = _CRITERIA[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {verdict} ({duration:.1f}s) {title}")
