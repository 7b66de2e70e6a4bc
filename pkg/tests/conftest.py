import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

DATA = Path(__file__).parent / "data"


def load_golden(name: str) -> dict:
    return json.loads((DATA / name).read_text())


def golden_table(golden: dict, n: int) -> dict:
    """Expected outcome per (generator, label): 'fix', 'kill' or the target label."""
    table = {}
    for label, fixes in golden["fixes"].items():
        for i in range(1, n):
            table[(i, label)] = "fix" if i in fixes else "kill"
    for src, i, dst in golden["arrows"]:
        table[(i, src)] = dst
    return table


def module_table(m) -> dict:
    from qhecke.hecke import label_str

    out = {}
    for b in m.basis:
        for i in range(1, m.n):
            o = m.outcome(i, b)
            out[(i, label_str(b))] = o if isinstance(o, str) else label_str(o[1])
    return out


@pytest.fixture
def golden():
    return load_golden


# acceptance bookkeeping: one PASS/FAIL line per criterion, repeated in the summary
ACCEPTANCE: list[str] = []


class criterion:
    def __init__(self, number: int, title: str, limit: float | None = None):
        self.number, self.title, self.limit = number, title, limit
        self.details: list[str] = []

    def __enter__(self):
        import time

        self._start = time.perf_counter()
        return self

    def check(self, name: str, ok: bool) -> None:
        if not ok:
            self.details.append(name)

    def __exit__(self, exc_type, exc, tb):
        import time

        seconds = time.perf_counter() - self._start
        if exc_type is not None:
            self.details.append(f"{exc_type.__name__}: {exc}")
        if self.limit is not None and seconds > self.limit:
            self.details.append(f"took {seconds:.2f}s, limit {self.limit}s")
        status = "FAIL" if self.details else "PASS"
        line = f"{status} criterion {self.number}: {self.title} ({seconds:.3f}s)"
        if self.details:
            line += " -- " + "; ".join(self.details)
        print(line)
        ACCEPTANCE.append(line)
        if exc_type is None:
            assert not self.details, line
        return False


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
