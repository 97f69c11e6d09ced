import acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines.LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(acceptance_lines.LINES.items()):
            terminalreporter.write_line(line)
