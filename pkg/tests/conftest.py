import re

import pytest

_CRITERIA: dict[str, tuple[bool, str]] = {}


def _key(label: str):
    m = re.match(r"(\d+)(.*)", label)
    return (int(m.group(1)), m.group(2)) if m else (10**6, label)


@pytest.fixture
def criterion():
    """Record one acceptance criterion: criterion("10a", ok, detail)."""

    def record(label, ok: bool, detail: str = "") -> bool:
        label = str(label)
        _CRITERIA[label] = (bool(ok), detail)
        print(f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")
        return bool(ok)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=_key):
        ok, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {label:>3}: {detail}")
