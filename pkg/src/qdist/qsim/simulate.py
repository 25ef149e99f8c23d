"""Exact state-vector runs of query algorithms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..boolfn import parse_string
from ..errors import DimensionMismatch
from .algorithm import REGISTERS, QueryAlgorithm
from .states import dephase, partial_trace

NORM_ATOL = 1e-9


def _check_input(x: Sequence[int], n: int, q: int) -> tuple[int, ...]:
    xs = parse_string(x)
    if len(xs) != n or any(not 0 <= a < q for a in xs):
        raise DimensionMismatch(f"input {xs} is not a length-{n} string over range({q})")
    return xs


def apply_oracle(state: np.ndarray, x: Sequence[int] | str, q: int = 2, w: int = 1) -> np.ndarray:
    """``|i, b, r> -> |i, (b + x_i) mod q, r>``."""
    xs = parse_string(x)
    n = len(xs)
    state = np.asarray(state, dtype=complex)
    if state.shape != (n * q * w,):
        raise DimensionMismatch(f"state of size {state.size} vs n*q*w = {n * q * w}")
    grid = state.reshape(n, q, w)
    out = np.empty_like(grid)
    for i, a in enumerate(xs):
        if a >= q:
            raise DimensionMismatch(f"letter {a} at position {i} exceeds alphabet {q}")
        out[i] = np.roll(grid[i], a, axis=0)
    return out.reshape(-1)


def initial_state(alg: QueryAlgorithm) -> np.ndarray:
    psi = np.zeros(alg.dim, dtype=complex)
    psi[0] = 1
    return alg.unitaries[0] @ psi


def postprocess(alg: QueryAlgorithm, psi: np.ndarray) -> np.ndarray:
    """Apply the algorithm's output spec to its final pure state."""
    spec = alg.output
    if spec.is_pure:
        return psi
    keep = [REGISTERS.index(r) for r in spec.keep]
    rho = partial_trace(psi, alg.dims, keep)
    return dephase(rho) if spec.dephase else rho


def final_state(alg: QueryAlgorithm, x) -> np.ndarray:
    """The pure state ``U_T O_x ... U_1 O_x U_0 |0>`` before any output processing."""
    xs = _check_input(x, alg.n, alg.q)
    psi = initial_state(alg)
    for u in alg.unitaries[1:]:
        psi = u @ apply_oracle(psi, xs, alg.q, alg.w)
    return psi


def run(alg: QueryAlgorithm, x) -> np.ndarray:
    """Output state: a vector for pure output, a density matrix otherwise."""
    return postprocess(alg, final_state(alg, x))


@dataclass(frozen=True)
class RunTrace:
    """States ``psi^0..psi^T`` and the query mass ``mass[t-1, i] = m_i^t``."""

    x: tuple[int, ...]
    states: tuple[np.ndarray, ...]
    mass: np.ndarray
    output: np.ndarray

    @property
    def T(self) -> int:
        return len(self.states) - 1


def index_mass(alg: QueryAlgorithm, psi: np.ndarray) -> np.ndarray:
    """Probability of finding the index register at each position."""
    grid = psi.reshape(alg.n, alg.q * alg.w)
    return np.sum(np.abs(grid) ** 2, axis=1)


def run_traced(alg: QueryAlgorithm, x) -> RunTrace:
    xs = _check_input(x, alg.n, alg.q)
    psi = initial_state(alg)
    states = [psi]
    masses = []
    for u in alg.unitaries[1:]:
        masses.append(index_mass(alg, psi))
        psi = u @ apply_oracle(psi, xs, alg.q, alg.w)
        if abs(np.linalg.norm(psi) - 1) > NORM_ATOL:
            raise AssertionError("norm drifted during simulation")
        states.append(psi)
    mass = np.array(masses).reshape(alg.T, alg.n)
    for s in states:
        s.setflags(write=False)
    return RunTrace(xs, tuple(states), mass, postprocess(alg, psi))


def sample_query_position(
    alg: QueryAlgorithm, x, t: int, seed: int | np.random.Generator | None = None, trace: RunTrace | None = None
) -> tuple[int, int]:
    """Run ``t`` queries' worth of the algorithm, measure the index register before query ``t``.

    Returns ``(i, x_i)``. Pass a ``trace`` to reuse an earlier ``run_traced``.
    """
    if not 1 <= t <= alg.T:
        raise ValueError(f"t = {t} outside 1..{alg.T}: no query to measure")
    trace = trace or run_traced(alg, x)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    p = np.clip(trace.mass[t - 1].real, 0, None)
    i = int(rng.choice(alg.n, p=p / p.sum()))
    return i, trace.x[i]
