"""Hermitian eigendecomposition and the norms built on it."""

from __future__ import annotations

import numpy as np

from ..errors import NotHermitian

HERMITIAN_ATOL = 1e-12


def is_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.allclose(m, m.conj().T, rtol=0, atol=atol)


def eig_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order and the matching eigenvector columns."""
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, atol):
        raise NotHermitian("matrix differs from its conjugate transpose")
    m = (m + m.conj().T) / 2
    vals, vecs = np.linalg.eigh(m)
    order = np.argsort(vals)[::-1]
    return vals[order], vecs[:, order]


def spectral_norm(m: np.ndarray) -> float:
    """Largest singular value; works for any (also non-square) matrix."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def trace_norm_hermitian(m: np.ndarray) -> float:
    vals, _ = eig_hermitian(m, atol=1e-9)
    return float(np.sum(np.abs(vals)))


def bipartite_norm(block: np.ndarray) -> float:
    """Spectral norm of the symmetric matrix ``[[0, G], [G^T, 0]]`` (equals ``||G||``)."""
    return spectral_norm(block)
