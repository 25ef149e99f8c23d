"""Quantum distinguishers and the QSZK-style state-pair constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np
from scipy.linalg import polar

from ..boolfn import Letters, PartialFunction, parse_string
from ..errors import (
    AlphabetUnsupported,
    BadArity,
    DimensionMismatch,
    IncompleteCoverage,
    NotBoundedError,
    QszkPromiseViolated,
    RegisterSpecInvalid,
)
from ..qsim.algorithm import REGISTERS, OutputSpec, QueryAlgorithm, from_builtins
from ..qsim.simulate import final_state, run
from ..qsim.states import as_density, is_density, partial_trace, trace_distance, trace_distance_pure

# absorbs float round-off when comparing against exact rational thresholds
ROUNDOFF = 1e-12
ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
ONE_SIXTH = Fraction(1, 6)


def distance(a: np.ndarray, b: np.ndarray) -> float:
    if a.ndim == 1 and b.ndim == 1:
        return trace_distance_pure(a, b)
    return trace_distance(a, b)


@dataclass(frozen=True)
class DistinguisherOutput:
    """Output state per domain string (a vector when pure) and the queries spent."""

    states: Mapping[Letters, np.ndarray]
    queries: int

    def __post_init__(self):
        shapes = {s.shape[0] for s in self.states.values()}
        if len(shapes) > 1:
            raise DimensionMismatch(f"output states of different sizes {sorted(shapes)}")
        for x, s in self.states.items():
            if s.ndim == 2 and not is_density(s):
                raise ValueError(f"output for {x} is not a density matrix")

    @classmethod
    def from_algorithm(cls, alg: QueryAlgorithm, f: PartialFunction) -> "DistinguisherOutput":
        return cls({x: run(alg, x) for x in f.domain}, alg.T)

    def density(self, x) -> np.ndarray:
        return as_density(self.states[parse_string(x)])


@dataclass(frozen=True)
class Verification:
    min_cross_distance: float
    passed: bool
    threshold: Fraction
    worst_pair: tuple | None


def verify_distinguisher(d: DistinguisherOutput, f: PartialFunction, threshold=ONE_SIXTH) -> Verification:
    """Minimum output distance over pairs with ``f(x) != f(y)``.

    Passing means ``min >= threshold - 1e-12``. A constant ``f`` has no cut
    pairs and passes with ``min = inf``.
    """
    missing = [x for x in f.domain if x not in d.states]
    if missing:
        raise IncompleteCoverage(f"{len(missing)} domain strings have no output state, e.g. {missing[0]}")
    best, pair = math.inf, None
    for x in f.inputs_with_value(0):
        for y in f.inputs_with_value(1):
            dist = distance(d.states[x], d.states[y])
            if dist < best:
                best, pair = dist, (x, y)
    threshold = Fraction(threshold)
    return Verification(best, best >= float(threshold) - ROUNDOFF, threshold, pair)


def collision_distinguisher(n: int) -> QueryAlgorithm:
    """One query: ``(1/sqrt n) sum_i |i, x_i>`` over alphabet ``q = n``."""
    if n < 2 or n & (n - 1):
        raise BadArity(f"collision distinguisher needs n a power of 2, got {n}")
    return from_builtins(n, n, 1, ["uniform-superposition", "identity"], name=f"collision{n}")


def acceptance_probability(alg: QueryAlgorithm, x) -> float:
    """Probability that measuring the answer register gives 1."""
    if alg.q < 2:
        raise AlphabetUnsupported("need an answer register with a 1 outcome")
    psi = final_state(alg, x).reshape(alg.n, alg.q, alg.w)
    return float(np.sum(np.abs(psi[:, 1, :]) ** 2))


def _bounded_probabilities(alg: QueryAlgorithm, f: PartialFunction) -> dict[Letters, float]:
    probs = {}
    for x, v in f.table.items():
        p = acceptance_probability(alg, x)
        if (v == 1 and p < 2 / 3 - ROUNDOFF) or (v == 0 and p > 1 / 3 + ROUNDOFF):
            raise NotBoundedError(f"acceptance probability {p:.6f} on {x} with f = {v}")
        probs[x] = p
    return probs


def _bit_state(p: float) -> np.ndarray:
    return np.diag([1 - p, p]).astype(complex)


def q_to_qd(alg: QueryAlgorithm, f: PartialFunction) -> DistinguisherOutput:
    """Measure the answer bit: ``rho_x = diag(1 - p_x, p_x)``."""
    probs = _bounded_probabilities(alg, f)
    return DistinguisherOutput({x: _bit_state(p) for x, p in probs.items()}, alg.T)


# ------------------------------------------------------------------ QSZK pairs

@dataclass(frozen=True)
class QszkPair:
    """``x -> (rho_x, sigma_x)`` and the total query count of both preparations."""

    pairs: Mapping[Letters, tuple[np.ndarray, np.ndarray]]
    queries: int

    def __post_init__(self):
        for x, (r, s) in self.pairs.items():
            if as_density(r).shape != as_density(s).shape:
                raise DimensionMismatch(f"rho and sigma differ in size at {x}")

    def distance(self, x) -> float:
        r, s = self.pairs[parse_string(x)]
        return distance(r, s)


@dataclass(frozen=True)
class QszkClauses:
    min_on_ones: float
    max_on_zeros: float
    passed: bool


def check_qszk_clauses(pair: QszkPair, f: PartialFunction, far=TWO_THIRDS, close=ONE_THIRD) -> QszkClauses:
    """``D(rho_x, sigma_x) >= far`` on 1-inputs and ``<= close`` on 0-inputs."""
    ones = [pair.distance(x) for x in f.inputs_with_value(1)]
    zeros = [pair.distance(x) for x in f.inputs_with_value(0)]
    lo = min(ones, default=math.inf)
    hi = max(zeros, default=0.0)
    ok = lo >= float(far) - ROUNDOFF and hi <= float(close) + ROUNDOFF
    return QszkClauses(lo, hi, ok)


def q_to_qszk(alg: QueryAlgorithm, f: PartialFunction) -> QszkPair:
    """``rho_x`` is the measured answer bit, ``sigma_x = |0><0|`` for every ``x``."""
    probs = _bounded_probabilities(alg, f)
    zero = _bit_state(0.0)
    return QszkPair({x: (_bit_state(p), zero) for x, p in probs.items()}, alg.T)


def qszk_to_qd(pair: QszkPair, f: PartialFunction) -> DistinguisherOutput:
    """Output ``rho_x ⊗ sigma_x``."""
    clauses = check_qszk_clauses(pair, f)
    if not clauses.passed:
        raise QszkPromiseViolated(
            f"min distance on 1-inputs {clauses.min_on_ones:.6f}, max on 0-inputs {clauses.max_on_zeros:.6f}"
        )
    states = {}
    for x in f.domain:
        r, s = pair.pairs[x]
        states[x] = np.kron(as_density(r), as_density(s))
    return DistinguisherOutput(states, pair.queries)


def triangle_step(pair: QszkPair, f: PartialFunction) -> float:
    """``min`` over cut pairs of ``max(D(rho_x, rho_y), D(sigma_x, sigma_y))``."""
    best = math.inf
    for x in f.inputs_with_value(0):
        for y in f.inputs_with_value(1):
            (rx, sx), (ry, sy) = pair.pairs[x], pair.pairs[y]
            best = min(best, max(distance(rx, ry), distance(sx, sy)))
    return best


def diagonal_grid_min(steps: int = 12, exact_constants: bool = False) -> Fraction:
    """Smallest ``D(rho_x⊗sigma_x, rho_y⊗sigma_y)`` over diagonal qubit states on a grid.

    ``x`` ranges over pairs at distance ``>= 2/3`` and ``y`` over pairs at
    distance ``<= 1/3`` (exactly ``2/3`` and ``1/3`` with ``exact_constants``).
    Every number is a ``Fraction``.
    """
    grid = [Fraction(k, steps) for k in range(steps + 1)]
    if exact_constants:
        ones = [(a, b) for a in grid for b in grid if abs(a - b) == TWO_THIRDS]
        zeros = [(a, b) for a in grid for b in grid if abs(a - b) == ONE_THIRD]
    else:
        ones = [(a, b) for a in grid for b in grid if abs(a - b) >= TWO_THIRDS]
        zeros = [(a, b) for a in grid for b in grid if abs(a - b) <= ONE_THIRD]
    if not ones or not zeros:
        raise ValueError(f"grid of {steps} steps has no pair at the required distances")

    def product(a, b):
        return [(1 - a) * (1 - b), (1 - a) * b, a * (1 - b), a * b]

    best = Fraction(1)
    for a, b in ones:
        px = product(a, b)
        for c, d in zeros:
            py = product(c, d)
            best = min(best, sum((abs(u - v) for u, v in zip(px, py)), Fraction(0)) / 2)
    return best


# ------------------------------------------------------------------ complement

def _register_split(alg: QueryAlgorithm) -> tuple[list[int], list[int]]:
    """``(B axes, C axes)``: C is what the algorithm keeps, B what it traces out."""
    spec = alg.output
    if spec.dephase:
        raise RegisterSpecInvalid("complement needs coherent outputs; got a dephased spec")
    if spec.is_pure:
        raise RegisterSpecInvalid("complement needs a purifying register B; the output keeps everything")
    c = [REGISTERS.index(r) for r in spec.keep]
    b = [k for k in range(3) if k not in c]
    return b, c


def _bc_vector(alg: QueryAlgorithm, psi: np.ndarray) -> tuple[np.ndarray, int, int]:
    b, c = _register_split(alg)
    t = psi.reshape(alg.dims).transpose(b + c)
    d_b = math.prod(alg.dims[k] for k in b)
    return t.reshape(-1), d_b, t.size // d_b


def complement_states(r: np.ndarray, s: np.ndarray, d_b: int, d_c: int) -> tuple[np.ndarray, np.ndarray]:
    """``|R'>, |S'>`` on ``A⊗B⊗C⊗D`` from ``|R>, |S>`` on ``B⊗C``."""
    if r.shape != (d_b * d_c,) or s.shape != r.shape:
        raise DimensionMismatch("purifications must both live on B⊗C")
    e0, e1 = np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)
    head = np.kron(e0, np.kron(r, e0))
    r_prime = (head + np.kron(e1, np.kron(s, e0))) / math.sqrt(2)
    s_prime = (head + np.kron(e1, np.kron(s, e1))) / math.sqrt(2)
    return r_prime, s_prime


def reduce_ab(state: np.ndarray, d_b: int, d_c: int) -> np.ndarray:
    return partial_trace(state, (2, d_b, d_c, 2), (0, 1))


def reduce_c(state: np.ndarray, d_b: int, d_c: int) -> np.ndarray:
    return partial_trace(state, (d_b, d_c), (1,))


def qszk_complement(alg_r: QueryAlgorithm, alg_s: QueryAlgorithm, f: PartialFunction) -> QszkPair:
    """Swap the roles of far and close: ``rho'_x = Tr_CD |R'_x><R'_x|``, same for ``sigma'``.

    Each algorithm's output spec names register C (what it keeps); the traced
    registers form B. Meant for the ideal regime ``D(rho_x, sigma_x) ∈ {0, 1}``.
    """
    if alg_r.dims != alg_s.dims or alg_r.output.keep != alg_s.output.keep:
        raise RegisterSpecInvalid("both circuits must share n, q, w and the kept registers")
    _register_split(alg_r)
    pairs = {}
    for x in f.domain:
        r, d_b, d_c = _bc_vector(alg_r, final_state(alg_r, x))
        s, _, _ = _bc_vector(alg_s, final_state(alg_s, x))
        rp, sp = complement_states(r, s, d_b, d_c)
        pairs[x] = (reduce_ab(rp, d_b, d_c), reduce_ab(sp, d_b, d_c))
    return QszkPair(pairs, alg_r.T + alg_s.T)


def purification_unitary(r: np.ndarray, s: np.ndarray, d_b: int, d_c: int) -> tuple[np.ndarray, float]:
    """``U_B`` with ``(U_B ⊗ 1)|R> ≈ |S>`` from the polar part of ``Tr_C |S><R|``.

    Returns ``(U_B, residual norm)``; the residual is ~0 exactly when the two
    reduced states on C agree.
    """
    m_r, m_s = r.reshape(d_b, d_c), s.reshape(d_b, d_c)
    u, _ = polar(m_s @ m_r.conj().T)
    return u, float(np.linalg.norm(u @ m_r - m_s))


def writing_unitary(sigma_c: np.ndarray, d_b: int, atol: float = 1e-9) -> np.ndarray:
    """``1_A ⊗ 1_B ⊗ (P_sigma ⊗ X_D + (1 - P_sigma) ⊗ 1_D)``.

    Records in D whether register C lies in the support of ``sigma``.
    """
    vals, vecs = np.linalg.eigh(sigma_c)
    support = vecs[:, vals > atol]
    p = support @ support.conj().T
    x_d = np.array([[0, 1], [1, 0]], dtype=complex)
    v = np.kron(p, x_d) + np.kron(np.eye(len(p)) - p, np.eye(2))
    return np.kron(np.eye(2 * d_b), v)


@dataclass(frozen=True)
class ComplementDiagnostics:
    x: Letters
    distance_in: float
    distance_out: float
    regime: str  # "equal", "orthogonal" or "non-ideal"
    witness_residual: float
    differ_only_in_d: bool


def complement_diagnostics(alg_r: QueryAlgorithm, alg_s: QueryAlgorithm, x) -> ComplementDiagnostics:
    """Rebuild the two argument steps for one input and report how exactly they hold.

    Equal regime: controlled on ``A = 0``, ``U_B`` turns ``R`` into ``S``; the
    residual is ``||(U_B⊗1)R - S||``. Orthogonal regime: the residual is
    ``||V|R'> - |S'>||`` for the writing unitary ``V``.
    """
    xs = parse_string(x)
    r, d_b, d_c = _bc_vector(alg_r, final_state(alg_r, xs))
    s, _, _ = _bc_vector(alg_s, final_state(alg_s, xs))
    rho, sigma = reduce_c(r, d_b, d_c), reduce_c(s, d_b, d_c)
    d_in = trace_distance(rho, sigma)
    rp, sp = complement_states(r, s, d_b, d_c)
    d_out = trace_distance(reduce_ab(rp, d_b, d_c), reduce_ab(sp, d_b, d_c))
    grid_r, grid_s = rp.reshape(2, d_b * d_c, 2), sp.reshape(2, d_b * d_c, 2)
    only_d = bool(
        np.allclose(grid_r[0], grid_s[0]) and np.allclose(grid_r[1, :, 0], grid_s[1, :, 1])
    )
    if d_in < 1e-9:
        _, residual = purification_unitary(r, s, d_b, d_c)
        regime = "equal"
    elif d_in > 1 - 1e-9:
        residual = float(np.linalg.norm(writing_unitary(sigma, d_b) @ rp - sp))
        regime = "orthogonal"
    else:
        residual, regime = math.nan, "non-ideal"
    return ComplementDiagnostics(xs, d_in, d_out, regime, residual, only_d)


def constant_reject(n: int, q: int = 2, w: int = 1) -> QueryAlgorithm:
    """No queries, answer register left at 0, bit output."""
    return from_builtins(n, q, w, ["identity"], OutputSpec.bit(), name=f"reject{n}")
