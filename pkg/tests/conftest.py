"""Shared test plumbing.

Acceptance tests append one verdict line per criterion to ACCEPTANCE_LINES;
the terminal summary prints them after the run, plus the whole-suite wall
time line for the runtime criterion (criterion 10 covers the suite itself,
so only the session hook can measure it honestly).
"""

import time

ACCEPTANCE_LINES = []

SUITE_BUDGET_SECONDS = 60.0


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_configure(config):
    config._suite_t0 = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - config._suite_t0
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    verdict = "PASS" if elapsed < SUITE_BUDGET_SECONDS else "FAIL"
    terminalreporter.write_line(
        f"[ACCEPTANCE] criterion 10: {verdict} "
        f"(suite wall time this run {elapsed:.2f}s, budget {SUITE_BUDGET_SECONDS:.0f}s)"
    )
