import helpers


def pytest_terminal_summary(terminalreporter):
    if helpers.CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in helpers.CRITERIA_LINES:
            terminalreporter.write_line(line)
