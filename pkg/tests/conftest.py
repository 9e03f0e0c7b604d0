"""Shared pytest plumbing: collect acceptance-criterion result lines and
echo them in the terminal summary so a plain `pytest -v` run shows one
PASS/FAIL line per criterion."""


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.line(line)
