from __future__ import annotations

import pytest

_LOG = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request) -> list:
    """Shared list of ``(number, title, passed, detail)`` rows for the summary."""
    cfg = request.config
    if _LOG not in cfg.stash:
        cfg.stash[_LOG] = []
    return cfg.stash[_LOG]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(_LOG, [])
    if not rows:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num, title, passed, detail in sorted(rows):
        tr.write_line(f"[{'PASS' if passed else 'FAIL'}] {num:2d}. {title}: {detail}")
