"""Shared fixtures plus a per-criterion summary for the acceptance run."""

_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    label = report.nodeid.split("::")[-1]
    _acceptance_results.append((label, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in sorted(_acceptance_results):
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[acceptance] {word} {label}")
