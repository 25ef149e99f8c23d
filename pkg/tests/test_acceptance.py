"""Acceptance criteria 1-10.

Each criterion runs one or more experiments from ``qdist.experiments`` and
prints a single line::

    [PASS] criterion  4  measure chains ...   78.1 s (limit 600 s)

The line is printed even when the criterion fails, then the test fails with
the failing checks. Running this file directly prints the same lines without
pytest.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

import pytest

from qdist.experiments import ExperimentResult, run_experiment


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    runs: tuple[tuple[str, dict], ...]
    limit: float  # seconds


CRITERIA = (
    Criterion(1, "hybrid-argument suite", (("hybrid", {}),), 5),
    Criterion(2, "trace-distance identity, 500 pure pairs", (("trace-identity", {"count": 500}),), 1),
    Criterion(3, "collision distinguisher, n = 4 exhaustive", (("collision", {"n": 4}),), 10),
    Criterion(
        4,
        "measure chains, all 3-bit + 200 random 4-bit",
        (("chain", {"n": 3, "exhaustive": True}), ("chain", {"n": 4, "exhaustive": False, "count": 200})),
        600,
    ),
    Criterion(5, "adversary values", (("adversary", {}),), 120),
    Criterion(6, "approximate degree of parity", (("parity-adeg", {"max_n": 4}),), 120),
    Criterion(7, "QSZK constructions", (("qszk-product", {}), ("qszk-complement", {})), 30),
    Criterion(
        8,
        "algorithm P and zero-error wrapper",
        (("cert-finder", {"seeds": 100}), ("zero-error", {"seeds": 100})),
        60,
    ),
    Criterion(9, "sabotage and RD/RS reductions", (("sabotage", {}), ("rdrs", {})), 10),
    Criterion(10, "minimal sensitive blocks, n <= 4 exhaustive", (("blocks", {"max_n": 4}),), 120),
)


def evaluate(c: Criterion) -> tuple[bool, float, list[ExperimentResult]]:
    start = time.perf_counter()
    results = [run_experiment(name, **params) for name, params in c.runs]
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results) and elapsed < c.limit
    return ok, elapsed, results


def status_line(c: Criterion, ok: bool, elapsed: float, results: list[ExperimentResult]) -> str:
    checks = sum(len(r.checks) for r in results)
    failed = sum(1 for r in results for ch in r.checks if not ch.passed)
    return (
        f"[{'PASS' if ok else 'FAIL'}] criterion {c.number:2d}  {c.title:<46s} "
        f"{checks - failed}/{checks} checks  {elapsed:7.2f} s (limit {c.limit:g} s)"
    )


@pytest.mark.slow
@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion{c.number:02d}")
def test_criterion(criterion, capsys):
    ok, elapsed, results = evaluate(criterion)
    with capsys.disabled():
        print("\n" + status_line(criterion, ok, elapsed, results))
    failures = [f"{r.name}: {ch.label} ({ch.detail})" for r in results for ch in r.checks if not ch.passed]
    assert not failures, "\n".join(failures)
    assert elapsed < criterion.limit, f"took {elapsed:.1f} s, limit {criterion.limit} s"


if __name__ == "__main__":
    all_ok = True
    for c in CRITERIA:
        ok, elapsed, results = evaluate(c)
        all_ok &= ok
        print(status_line(c, ok, elapsed, results), flush=True)
    sys.exit(0 if all_ok else 1)
