"""Certificate finding from a distinguisher, and the zero-error wrapper around it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..boolfn import PartialAssignment, PartialFunction, parse_string, restrict_assignment
from ..errors import BudgetExhausted, OutOfDomain
from ..measures.combinatorial import is_certificate
from ..qsim.algorithm import QueryAlgorithm
from ..qsim.simulate import run_traced

# leading constant of the repetition count; chosen so batch-1 success is high at n = 4
REPETITION_CONSTANT = 64
DEFAULT_MAX_BATCHES = 64


def repetitions(T: int, s: int, fbs, constant: int = REPETITION_CONSTANT) -> int:
    """``constant * T^2 * s * ceil(log2(fbs + 2))``; ``fbs`` stands in for RC."""
    return constant * T * T * s * math.ceil(math.log2(Fraction(fbs) + 2))


@dataclass(frozen=True)
class FinderResult:
    assignment: PartialAssignment
    is_cert: bool
    repetitions: int


def certificate_finder_P(
    alg: QueryAlgorithm, f: PartialFunction, x, R: int, seed: int | np.random.Generator | None = None
) -> FinderResult:
    """``R`` runs of: pick ``t`` uniformly in ``1..T``, run to query ``t``, measure the index.

    Every measured ``(i, x_i)`` goes on the tape; the union is returned with
    whether it certifies ``f`` at ``x``. The ``R`` draws of ``t`` come first,
    then the positions for each ``t`` in one batch, which is the same
    distribution as ``R`` calls to ``sample_query_position``.
    """
    xs = parse_string(x)
    if xs not in f:
        raise OutOfDomain(xs)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    letters: dict[int, int] = {}
    if R > 0 and alg.T > 0:
        trace = run_traced(alg, xs)
        ts = rng.integers(1, alg.T + 1, size=R)
        for t in range(1, alg.T + 1):
            count = int(np.sum(ts == t))
            if count:
                p = np.clip(trace.mass[t - 1].real, 0, None)
                for i in rng.choice(alg.n, size=count, p=p / p.sum()):
                    letters[int(i)] = xs[i]
    assignment = PartialAssignment.from_dict(f.n, letters)
    return FinderResult(assignment, is_certificate(f, assignment), R)


@dataclass(frozen=True)
class WrapperResult:
    value: int
    certificate: PartialAssignment
    batches_used: int


def zero_error_wrapper(
    alg: QueryAlgorithm,
    f: PartialFunction,
    x,
    seed: int | None,
    R: int,
    max_batches: int = DEFAULT_MAX_BATCHES,
) -> WrapperResult:
    """Run fresh batches of ``R`` repetitions until one yields a certificate.

    The value is read off the certificate, never guessed. ``batches_used = 0``
    when the empty assignment already certifies (``f`` constant).
    """
    xs = parse_string(x)
    if xs not in f:
        raise OutOfDomain(xs)
    empty = PartialAssignment.from_dict(f.n, {})
    if is_certificate(f, empty):
        return WrapperResult(f(xs), empty, 0)
    rng = np.random.default_rng(seed)
    for batch in range(1, max_batches + 1):
        found = certificate_finder_P(alg, f, xs, R, rng)
        if found.is_cert:
            witness = restrict_assignment(f, found.assignment)[0]
            return WrapperResult(f(witness), found.assignment, batch)
    raise BudgetExhausted(f"no certificate for {xs} after {max_batches} batches of {R}")
