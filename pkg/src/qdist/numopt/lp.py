"""Exact rational linear programming.

Two-phase tableau simplex over :class:`fractions.Fraction` with Bland's
anti-cycling rule. No floating point is used anywhere on this path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Number = int | Fraction

LE, EQ, GE = "<=", "=", ">="


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in (LE, EQ, GE):
            raise ValueError(f"bad relation {self.relation!r}")


@dataclass
class RationalLP:
    """``maximize objective·x`` subject to row constraints and per-variable bounds.

    Variables are free unless ``bounds[j] = (lo, hi)`` says otherwise; either
    end may be ``None``.
    """

    n_vars: int
    objective: list[Fraction]
    constraints: list[Constraint] = field(default_factory=list)
    bounds: list[tuple[Fraction | None, Fraction | None]] | None = None

    def __post_init__(self):
        self.objective = [Fraction(c) for c in self.objective]
        if len(self.objective) != self.n_vars:
            raise ValueError("objective length must equal n_vars")
        for c in self.constraints:
            if len(c.row) != self.n_vars:
                raise ValueError("constraint row length must equal n_vars")
        if self.bounds is None:
            self.bounds = [(None, None)] * self.n_vars
        elif len(self.bounds) != self.n_vars:
            raise ValueError("bounds length must equal n_vars")

    def add(self, row: Sequence[Number], relation: str, rhs: Number) -> None:
        if len(row) != self.n_vars:
            raise ValueError("constraint row length must equal n_vars")
        self.constraints.append(Constraint(tuple(Fraction(a) for a in row), relation, Fraction(rhs)))


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Dense tableau; row ``r`` reads ``sum_j a[r][j] x_j = b[r]`` with ``basis[r]`` basic."""

    def __init__(self, a, b, basis):
        self.a = a
        self.b = b
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        a, b = self.a, self.b
        piv = a[r][c]
        row = [v / piv for v in a[r]]
        a[r] = row
        b[r] = b[r] / piv
        for k in range(len(a)):
            if k == r:
                continue
            factor = a[k][c]
            if factor:
                ak = a[k]
                for j, v in enumerate(row):
                    if v:
                        ak[j] -= factor * v
                b[k] -= factor * b[r]
        self.basis[r] = c

    def reduced_costs(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> list[Fraction]:
        # maximize cost·x: reduced cost d_j = c_j - sum_r c_basis[r] a[r][j]
        d = list(cost)
        for r, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                for j, v in enumerate(self.a[r]):
                    if v:
                        d[j] -= cb * v
        return [dj if ok else Fraction(0) for dj, ok in zip(d, allowed)]

    def optimize(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> bool:
        """Run primal simplex with Bland's rule; False means unbounded."""
        while True:
            d = self.reduced_costs(cost, allowed)
            entering = next((j for j, dj in enumerate(d) if dj > 0), None)
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.a):
                if row[entering] > 0:
                    ratio = self.b[r] / row[entering]
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)


def lp_solve(p: RationalLP) -> LPResult:
    """Solve ``p`` exactly; the status covers every outcome."""
    # Substitute x_j by nonnegative columns: x = lo + u, x = hi - u, or x = u+ - u-.
    cols: list[list[tuple[int, Fraction]]] = []  # per original var: (column, sign)
    offsets: list[Fraction] = []
    extra: list[tuple[dict[int, Fraction], str, Fraction]] = []
    ncol = 0
    for j, (lo, hi) in enumerate(p.bounds):
        lo = None if lo is None else Fraction(lo)
        hi = None if hi is None else Fraction(hi)
        if lo is not None:
            cols.append([(ncol, Fraction(1))])
            offsets.append(lo)
            if hi is not None:
                extra.append(({ncol: Fraction(1)}, LE, hi - lo))
            ncol += 1
        elif hi is not None:
            cols.append([(ncol, Fraction(-1))])
            offsets.append(hi)
            ncol += 1
        else:
            cols.append([(ncol, Fraction(1)), (ncol + 1, Fraction(-1))])
            offsets.append(Fraction(0))
            ncol += 2

    rows: list[tuple[dict[int, Fraction], str, Fraction]] = []
    for con in p.constraints:
        coeffs: dict[int, Fraction] = {}
        rhs = con.rhs
        for j, a in enumerate(con.row):
            if not a:
                continue
            rhs -= a * offsets[j]
            for c, s in cols[j]:
                coeffs[c] = coeffs.get(c, Fraction(0)) + a * s
        rows.append((coeffs, con.relation, rhs))
    rows.extend(extra)

    cost = [Fraction(0)] * ncol
    for j, cj in enumerate(p.objective):
        for c, s in cols[j]:
            cost[c] += cj * s

    # Normalise to nonnegative right-hand sides and add slack/artificial columns.
    norm = []
    for coeffs, rel, rhs in rows:
        if rhs < 0:
            coeffs = {c: -v for c, v in coeffs.items()}
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        norm.append((coeffs, rel, rhs))
    n_slack = sum(1 for _, rel, _ in norm if rel != EQ)
    n_art = sum(1 for _, rel, _ in norm if rel != LE)
    width = ncol + n_slack + n_art
    a, b, basis = [], [], []
    art_cols = []
    s_next, r_next = ncol, ncol + n_slack
    for coeffs, rel, rhs in norm:
        row = [Fraction(0)] * width
        for c, v in coeffs.items():
            row[c] = v
        if rel == LE:
            row[s_next] = Fraction(1)
            basis.append(s_next)
            s_next += 1
        else:
            if rel == GE:
                row[s_next] = Fraction(-1)
                s_next += 1
            row[r_next] = Fraction(1)
            basis.append(r_next)
            art_cols.append(r_next)
            r_next += 1
        a.append(row)
        b.append(rhs)
    tab = _Tableau(a, b, basis)

    if art_cols:
        phase1 = [Fraction(0)] * width
        for c in art_cols:
            phase1[c] = Fraction(-1)
        tab.optimize(phase1, [True] * width)
        art = set(art_cols)
        infeas = sum(tab.b[r] for r, bv in enumerate(tab.basis) if bv in art)
        if infeas > 0:
            return LPResult(LPStatus.INFEASIBLE)
        # drive zero-level artificials out of the basis; drop redundant rows
        r = 0
        while r < len(tab.a):
            if tab.basis[r] in art:
                c = next((j for j in range(ncol + n_slack) if tab.a[r][j] != 0), None)
                if c is None:
                    del tab.a[r], tab.b[r], tab.basis[r]
                    continue
                tab.pivot(r, c)
            r += 1
    allowed = [j < ncol + n_slack for j in range(width)]
    full_cost = cost + [Fraction(0)] * (width - ncol)
    if not tab.optimize(full_cost, allowed):
        return LPResult(LPStatus.UNBOUNDED)

    u = [Fraction(0)] * width
    for r, bv in enumerate(tab.basis):
        u[bv] = tab.b[r]
    x = []
    for j in range(p.n_vars):
        x.append(offsets[j] + sum(s * u[c] for c, s in cols[j]))
    value = sum(cj * xj for cj, xj in zip(p.objective, x))
    return LPResult(LPStatus.OPTIMAL, Fraction(value), tuple(x))
