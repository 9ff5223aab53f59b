import random

import pytest
from hypothesis import settings

settings.register_profile("jparity", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("jparity")


@pytest.fixture
def rng():
    return random.Random(20240917)


_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``criterion("3", "description", ok)``; the test then asserts ``ok``.
    """
    def record(number: str, text: str, ok: bool):
        _ACCEPTANCE.setdefault(number, []).append((request.node.name, text, bool(ok)))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE, key=lambda s: (len(s), s)):
        for name, text, ok in _ACCEPTANCE[number]:
            terminalreporter.write_line(
                f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text} ({name})")
