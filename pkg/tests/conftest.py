import pytest

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        n, title = marker
        prev = _results.get(n, (title, True))
        _results[n] = (title, prev[1] and report.passed)


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    m = request.node.get_closest_marker("acceptance")
    if m:
        request.node.user_properties.append(("acceptance", tuple(m.args)))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        title, ok = _results[n]
        terminalreporter.write_line(f"AC{n:<2} {'PASS' if ok else 'FAIL'}  {title}")
