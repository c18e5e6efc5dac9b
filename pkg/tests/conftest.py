import re

_RESULTS = {}
_NAME = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    match = _NAME.search(report.nodeid)
    if not match:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call" or report.failed:
        prev = _RESULTS.get(key, "PASS")
        _RESULTS[key] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    by_number = {}
    for (n, name), status in sorted(_RESULTS.items()):
        by_number.setdefault(n, []).append((name, status))
    for n, parts in sorted(by_number.items()):
        status = "PASS" if all(s == "PASS" for _, s in parts) else "FAIL"
        detail = ", ".join(f"{name}={s}" for name, s in parts)
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({detail})")
