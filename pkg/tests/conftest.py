import re

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_(a\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion."""
    rows = {}
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _ACCEPTANCE.search(getattr(rep, "nodeid", ""))
            if m:
                rows[f"{m.group(1).upper()} {m.group(2).replace('_', ' ')}"] = label
    if rows:
        terminalreporter.section("acceptance criteria")
        for name in sorted(rows):
            terminalreporter.write_line(f"{name}: {rows[name]}")
