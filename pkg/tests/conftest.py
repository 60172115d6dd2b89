import time

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


class Criterion:
    """Times one acceptance criterion and records a pass/fail line for the summary."""

    def __init__(self, number: int, title: str, budget: float):
        self.number, self.title, self.budget = number, title, budget
        self.checks: list[tuple[str, bool]] = []

    def check(self, label: str, ok: bool):
        self.checks.append((label, bool(ok)))

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        self.check(f"runtime {elapsed:.2f}s < {self.budget:g}s", elapsed < self.budget)
        if exc_type is not None:
            self.check(f"raised {exc_type.__name__}: {exc}", False)
        failed = [label for label, ok in self.checks if not ok]
        detail = "; ".join(failed) if failed else f"{len(self.checks)} checks, {elapsed:.2f}s"
        ACCEPTANCE[self.number] = (self.title, not failed, detail)
        if exc_type is None:
            assert not failed, detail
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[k]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {k:2d}. {title}  ({detail})")
