import helpers


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Replay the acceptance-criterion lines after the normal test summary."""
    if not helpers.ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(helpers.ACCEPTANCE_LINES):
        description, passed = helpers.ACCEPTANCE_LINES[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} - {description}")
