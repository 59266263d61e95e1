"""Terminal-summary reporting for the acceptance suite.

The acceptance tests register one human-readable line per criterion; the
summary hook prints them (plus a FAIL line for any criterion test that did
not pass) after the run, outside pytest's capture.
"""

ACCEPTANCE_LINES: list[str] = []


def register_acceptance_line(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    failed = {
        rep.nodeid.split("::")[-1]
        for rep in terminalreporter.stats.get("failed", [])
        if "test_acceptance" in rep.nodeid
    }
    if not ACCEPTANCE_LINES and not failed:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    for name in sorted(failed):
        terminalreporter.write_line(f"{name}: FAIL")
