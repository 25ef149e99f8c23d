"""Executable hybrid argument: query mass on a block versus output distinguishability."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..boolfn import flip, parse_string
from ..errors import AlphabetUnsupported
from .algorithm import QueryAlgorithm
from .simulate import run_traced
from .states import trace_distance

SLACK = 1e-9


@dataclass(frozen=True)
class HybridResult:
    mass: float
    bound: float
    refined_bound: float
    epsilon: float
    distance: float
    passed: bool
    T: int


def hybrid_check(alg: QueryAlgorithm, x, block: Iterable[int]) -> HybridResult:
    """Compare ``Σ_t Σ_{i∈B} m_i^t`` with ``(1-2ε)^2 / 4T``.

    ``ε`` comes from the measured output distance between ``x`` and ``x^B``:
    ``1 - 2ε = D(out(x), out(x^B))``. ``refined_bound`` is the sharper
    ``(1 - 2 sqrt(ε(1-ε))) / 2T``; it is reported, not asserted.
    """
    if alg.q != 2:
        raise AlphabetUnsupported("hybrid_check flips bits; needs q = 2")
    xs = parse_string(x)
    block = sorted(set(block))
    tx = run_traced(alg, xs)
    ty = run_traced(alg, flip(xs, block))
    distance = min(1.0, trace_distance(tx.output, ty.output))
    epsilon = (1 - distance) / 2
    mass = float(tx.mass[:, block].sum().real) if alg.T else 0.0
    if alg.T == 0:
        bound = refined = 0.0
    else:
        bound = distance**2 / (4 * alg.T)
        refined = max(0.0, 1 - 2 * math.sqrt(max(0.0, epsilon * (1 - epsilon)))) / (2 * alg.T)
    return HybridResult(mass, bound, refined, epsilon, distance, mass >= bound - SLACK, alg.T)


@dataclass(frozen=True)
class HybridStep:
    t: int
    d_prev: float
    d_next: float
    increment_bound: float

    @property
    def ok(self) -> bool:
        return self.d_next <= self.d_prev + self.increment_bound + SLACK


def hybrid_steps(alg: QueryAlgorithm, x, block: Iterable[int]) -> list[HybridStep]:
    """Per-query check of ``d_t <= d_{t-1} + 2 sqrt(Σ_{i∈B} m_i^t)``."""
    xs = parse_string(x)
    block = sorted(set(block))
    tx = run_traced(alg, xs)
    ty = run_traced(alg, flip(xs, block))
    d = [float(np.linalg.norm(a - b)) for a, b in zip(tx.states, ty.states)]
    out = []
    for t in range(1, alg.T + 1):
        inc = 2 * math.sqrt(max(0.0, float(tx.mass[t - 1, block].sum().real)))
        out.append(HybridStep(t, d[t - 1], d[t], inc))
    return out
