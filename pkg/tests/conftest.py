import re

_results: dict = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if not match:
        return
    key = int(match.group(1)), match.group(2).replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        outcome, elapsed = _results.get(key, ("passed", 0.0))
        if report.outcome != "passed":
            outcome = "failed"
        _results[key] = (outcome, elapsed + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), (outcome, elapsed) in sorted(_results.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {name}: {verdict} ({elapsed:.2f} s)")
