"""Adversary-bound semidefinite programs with two-sided certificates.

The value is ``max ||Γ||`` over matrices supported on 0-input/1-input pairs
with ``||Γ∘D_i|| <= 1`` for every position ``i``. We solve the equivalent
program

    maximize 2·Σ G[x,y]  s.t.  [[diag(p_X), G∘D_i], [(G∘D_i)^T, diag(p_Y)]] ⪰ 0,
    Σ p = 1, p >= 0   (and G >= 0 in nonnegative mode)

with Clarabel, then discard the solver's claims and certify from scratch:

* lower bound: rescale to ``Γ = G / sqrt(p_x p_y)`` and evaluate
  ``||Γ|| / max_i ||Γ∘D_i||`` by eigendecomposition;
* upper bound: take the PSD duals ``X_i``, clip them to the PSD cone and use
  weak duality ``||Γ|| <= max_x Σ_i X_i[x,x]`` after normalising the pair
  constraints ``Σ_i D_i[x,y] X_i[x,y] = 1`` (``>= 1`` when nonnegative).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import cvxpy as cp
import numpy as np

from ..errors import ConvergenceFailure
from ..report import MeasureReport, Provenance
from .linalg import eig_hermitian, spectral_norm

NONNEGATIVE = "nonnegative"
UNRESTRICTED = "unrestricted"
DEFAULT_TOL = 1e-4
MAX_ENTRIES = 256


@dataclass(frozen=True)
class SdpAdversaryInstance:
    X: tuple
    Y: tuple
    masks: tuple[np.ndarray, ...]
    mode: str = NONNEGATIVE

    def __post_init__(self):
        if self.mode not in (NONNEGATIVE, UNRESTRICTED):
            raise ValueError(f"unknown sign mode {self.mode!r}")
        shape = (len(self.X), len(self.Y))
        for m in self.masks:
            if m.shape != shape:
                raise ValueError(f"mask shape {m.shape} != {shape}")
        if self.X and self.Y and self.masks:
            if not np.all(sum(self.masks) > 0):
                raise ValueError("some 0-input/1-input pair agrees everywhere")

    @classmethod
    def from_strings(cls, X: Sequence[Sequence[int]], Y: Sequence[Sequence[int]], mode: str = NONNEGATIVE):
        X, Y = tuple(map(tuple, X)), tuple(map(tuple, Y))
        n = len(X[0]) if X else (len(Y[0]) if Y else 0)
        masks = tuple(
            np.array([[float(x[i] != y[i]) for y in Y] for x in X]).reshape(len(X), len(Y)) for i in range(n)
        )
        return cls(X, Y, masks, mode)


def witness_value(gamma: np.ndarray, masks: Sequence[np.ndarray]) -> float:
    """``||Γ|| / max_i ||Γ∘D_i||``: the bound certified by an explicit witness."""
    denom = max(spectral_norm(gamma * m) for m in masks)
    if denom <= 0:
        return 0.0
    return spectral_norm(gamma) / denom


def _psd_clip(m: np.ndarray) -> np.ndarray:
    vals, vecs = eig_hermitian((m + m.T) / 2, atol=1e-6)
    vals = np.clip(vals.real, 0, None)
    return ((vecs * vals) @ vecs.conj().T).real


def dual_upper_bound(xs: Sequence[np.ndarray], masks: Sequence[np.ndarray], mode: str) -> float:
    """Weak-duality bound from candidate dual matrices (not assumed feasible)."""
    a, b = masks[0].shape
    xs = [_psd_clip(x) for x in xs]
    t = float(max(sum(x[k, k] for x in xs) for k in range(a + b)))
    s = sum(m * x[:a, a:] for m, x in zip(masks, xs))
    if mode == NONNEGATIVE:
        smin = float(s.min())
        if smin <= 0:
            return math.inf
        return t / min(1.0, smin)
    eta = float(np.abs(1.0 - s).max())
    return t + eta * math.sqrt(a * b)


def adversary_sdp(inst: SdpAdversaryInstance, tol: float = DEFAULT_TOL) -> MeasureReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    name = "adv" if inst.mode == NONNEGATIVE else "gen_adv"
    a, b = len(inst.X), len(inst.Y)
    if a == 0 or b == 0:
        return MeasureReport(name, 0.0, 0.0, 0.0, tol, Provenance.SDP_CERTIFIED, "one side of the cut is empty")
    if a * b > MAX_ENTRIES:
        raise ValueError(f"instance has {a * b} pair entries, cap is {MAX_ENTRIES}")
    masks = [m for m in inst.masks if m.any()]

    p = cp.Variable(a + b, nonneg=True)
    G = cp.Variable((a, b), nonneg=inst.mode == NONNEGATIVE)
    cones = []
    for m in masks:
        M = cp.multiply(G, m)
        cones.append(cp.bmat([[cp.diag(p[:a]), M], [M.T, cp.diag(p[a:])]]) >> 0)
    prob = cp.Problem(cp.Maximize(2 * cp.sum(G)), [cp.sum(p) == 1] + cones)
    try:
        prob.solve(solver=cp.CLARABEL)
    except cp.SolverError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    if p.value is None or G.value is None:
        raise ConvergenceFailure(f"solver status {prob.status}")

    pv = np.clip(p.value, 0, None)
    scale = np.sqrt(np.outer(pv[:a], pv[a:]))
    gamma = np.where(scale > 1e-12, G.value / np.where(scale > 1e-12, scale, 1.0), 0.0)
    if inst.mode == NONNEGATIVE:
        gamma = np.clip(gamma, 0, None)
    lower = max(witness_value(gamma, masks), witness_value(np.ones((a, b)), masks))

    # cvxpy's PSD duals W_i satisfy sum_i D_i W_i[x,y] = -1 on pairs; flipping the
    # off-diagonal sign gives the dual matrices X_i of the min-form program.
    flip = np.concatenate([np.ones(a), -np.ones(b)])
    duals = [np.outer(flip, flip) * np.real(c.dual_value) for c in cones]
    upper = dual_upper_bound(duals, masks, inst.mode)

    if not upper - lower <= tol:
        raise ConvergenceFailure(f"{name}: certified gap {upper - lower:.3g} exceeds tol {tol:g}")
    value = (lower + upper) / 2
    return MeasureReport(
        name,
        value,
        lower,
        upper,
        tol,
        Provenance.SDP_CERTIFIED,
        "lower from explicit witness, upper from repaired dual",
        {"witness": gamma, "solver_value": float(prob.value)},
    )
