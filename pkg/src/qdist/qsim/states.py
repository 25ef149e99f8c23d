"""Density matrices, partial traces and trace distance."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..errors import BadFactorization, DimensionMismatch
from ..numopt.linalg import eig_hermitian


def ket(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1
    return v


def as_density(state: np.ndarray) -> np.ndarray:
    """Pure vectors become projectors; matrices pass through."""
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        return np.outer(state, state.conj())
    return state


def is_density(rho: np.ndarray, atol: float = 1e-9) -> bool:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if not np.allclose(rho, rho.conj().T, atol=atol):
        return False
    if abs(np.trace(rho) - 1) > atol:
        return False
    vals, _ = eig_hermitian(rho, atol=atol)
    return bool(vals.min() >= -1e-10)


def trace_distance_pure(psi: np.ndarray, phi: np.ndarray) -> float:
    """``sqrt(1 - |<psi|phi>|^2)`` for unit vectors.

    Evaluated as the norm of the part of ``phi`` orthogonal to ``psi``, which
    equals the same quantity but keeps full relative precision when the two
    states nearly coincide.
    """
    psi, phi = np.asarray(psi), np.asarray(phi)
    if psi.shape != phi.shape or psi.ndim != 1:
        raise DimensionMismatch(f"shapes {psi.shape} and {phi.shape}")
    residual = phi - np.vdot(psi, phi) * psi
    return min(1.0, float(np.linalg.norm(residual)))


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Half the trace norm of ``rho - sigma``; pure vectors are accepted too."""
    rho, sigma = as_density(rho), as_density(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shapes {rho.shape} and {sigma.shape}")
    vals, _ = eig_hermitian(rho - sigma, atol=1e-9)
    return float(np.sum(np.abs(vals)) / 2)


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every factor of ``dims`` not listed in ``keep`` (factor order preserved)."""
    rho = as_density(rho)
    dims = tuple(int(d) for d in dims)
    total = math.prod(dims)
    if rho.shape != (total, total):
        raise BadFactorization(f"dims {dims} do not factor a {rho.shape[0]}-dimensional state")
    keep = sorted(set(keep))
    if any(not 0 <= k < len(dims) for k in keep):
        raise BadFactorization(f"keep {keep} outside {len(dims)} factors")
    k = len(dims)
    t = rho.reshape(dims + dims)
    letters = "abcdefghijklmnopqrstuvwxyz"
    rows = list(letters[:k])
    cols = list(letters[k : 2 * k])
    for j in range(k):
        if j not in keep:
            cols[j] = rows[j]
    out = "".join(rows[j] for j in keep) + "".join(cols[j] for j in keep)
    reduced = np.einsum("".join(rows) + "".join(cols) + "->" + out, t)
    d = math.prod(dims[j] for j in keep)
    return reduced.reshape(d, d)


def dephase(rho: np.ndarray, basis: np.ndarray | None = None) -> np.ndarray:
    """Completely dephase in the columns of ``basis`` (computational basis by default)."""
    rho = as_density(rho)
    if basis is None:
        return np.diag(np.diag(rho))
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != rho.shape:
        raise DimensionMismatch(f"basis shape {basis.shape} vs state {rho.shape}")
    in_basis = basis.conj().T @ rho @ basis
    return basis @ np.diag(np.diag(in_basis)) @ basis.conj().T
