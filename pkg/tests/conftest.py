import random

import pytest

ACCEPTANCE: list[tuple[str, str, str]] = []  # (criterion, PASS/FAIL, detail)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def record():
    """Record one acceptance line; printed immediately and again in the summary."""

    def rec(criterion: str, ok: bool, detail: str) -> None:
        line = (criterion, "PASS" if ok else "FAIL", detail)
        ACCEPTANCE.append(line)
        print(f"[acceptance] criterion {line[0]}: {line[1]} ({line[2]})")

    return rec


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, verdict, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {criterion}: {verdict} ({detail})")
