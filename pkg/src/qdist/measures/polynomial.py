"""Exact and approximate polynomial degree over the rationals."""

from __future__ import annotations

from fractions import Fraction

from ..boolfn import PartialFunction
from ..errors import AlphabetUnsupported, PartialUnsupported
from ..numopt.bisect import bisect_feasibility
from ..numopt.lp import GE, LE, RationalLP, lp_solve
from ..report import MeasureReport, Provenance
from .combinatorial import masks_by_weight

MONOMIAL = "monomial"
FOURIER = "fourier"


def multilinear_coefficients(f: PartialFunction) -> dict[int, int]:
    """Möbius transform: ``f(x) = Σ_S c_S Π_{i∈S} x_i`` with ``S`` a code mask."""
    if f.q != 2:
        raise AlphabetUnsupported("degree needs a binary alphabet")
    if not f.is_total:
        raise PartialUnsupported("the interpolating polynomial is unique only for total functions")
    n = f.n
    c = [f.codes[m] for m in range(1 << n)]
    for bit in range(n):
        step = 1 << bit
        for m in range(1 << n):
            if m & step:
                c[m] -= c[m ^ step]
    return {m: v for m, v in enumerate(c) if v}


def exact_degree(f: PartialFunction) -> MeasureReport:
    coeffs = multilinear_coefficients(f)
    deg = max((m.bit_count() for m in coeffs), default=0)
    return MeasureReport.exact("deg", deg)


def _basis_value(basis: str, monomial: int, x: int) -> int:
    if basis == MONOMIAL:
        return int(monomial & x == monomial)
    return -1 if (monomial & x).bit_count() % 2 else 1


def approximation_lp(f: PartialFunction, degree: int, error: Fraction, basis: str = MONOMIAL):
    """The feasibility LP ``|p(x) - f(x)| <= error`` on ``Dom(f)`` with ``deg p <= degree``."""
    monomials = [0] + [m for m in masks_by_weight(f.n) if m.bit_count() <= degree]
    lp = RationalLP(len(monomials), [0] * len(monomials))
    for x, v in f.codes.items():
        row = [_basis_value(basis, m, x) for m in monomials]
        lp.add(row, LE, v + error)
        lp.add(row, GE, v - error)
    return lp, monomials


def approx_feasible(f: PartialFunction, degree: int, error=Fraction(1, 3), basis: str = MONOMIAL) -> bool:
    lp, _ = approximation_lp(f, degree, Fraction(error), basis)
    return lp_solve(lp).optimal


def approx_degree(f: PartialFunction, error=Fraction(1, 3), basis: str = MONOMIAL) -> MeasureReport:
    """Least degree of a real polynomial within ``error`` of ``f`` on its domain.

    Off the domain the polynomial is unconstrained.
    """
    if f.q != 2:
        raise AlphabetUnsupported("approximate degree needs a binary alphabet")
    if basis not in (MONOMIAL, FOURIER):
        raise ValueError(f"unknown basis {basis!r}")
    error = Fraction(error)
    d = bisect_feasibility(lambda k: approx_feasible(f, k, error, basis), 0, f.n)
    lp, monomials = approximation_lp(f, d, error, basis)
    sol = lp_solve(lp)
    poly = {m: c for m, c in zip(monomials, sol.assignment) if c}
    return MeasureReport.exact(
        "adeg", d, Provenance.EXACT_LP, note=f"error {error}, {basis} basis", polynomial=poly
    )
