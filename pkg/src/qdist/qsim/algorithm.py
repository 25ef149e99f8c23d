"""Query algorithms: ``T+1`` fixed unitaries on index ⊗ answer ⊗ workspace.

Basis state ``|i, b, r>`` sits at row ``(i*q + b)*w + r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.stats import unitary_group

from ..errors import DimensionMismatch

MAX_DIM = 4096
UNITARY_ATOL = 1e-10
REGISTERS = ("index", "answer", "work")


@dataclass(frozen=True)
class OutputSpec:
    """How the final pure state is post-processed.

    ``keep`` lists the registers that survive the partial trace; ``dephase``
    then kills coherences in the computational basis. ``OutputSpec()`` is the
    pure output; ``OutputSpec.bit()`` keeps and dephases the answer register,
    which is how an algorithm announces a one-bit answer.
    """

    keep: tuple[str, ...] = REGISTERS
    dephase: bool = False

    def __post_init__(self):
        if not self.keep or any(r not in REGISTERS for r in self.keep):
            raise ValueError(f"keep must be a nonempty subset of {REGISTERS}")
        object.__setattr__(self, "keep", tuple(r for r in REGISTERS if r in self.keep))

    @classmethod
    def bit(cls) -> "OutputSpec":
        return cls(("answer",), True)

    @property
    def is_pure(self) -> bool:
        return self.keep == REGISTERS and not self.dephase

    def describe(self) -> str:
        if self.is_pure:
            return "pure"
        return ("dephase " if self.dephase else "reduced ") + ",".join(self.keep)

    @classmethod
    def parse(cls, text: str) -> "OutputSpec":
        parts = text.split()
        if parts == ["pure"]:
            return cls()
        if len(parts) == 2 and parts[0] in ("reduced", "dephase"):
            return cls(tuple(parts[1].split(",")), parts[0] == "dephase")
        raise ValueError(f"bad output spec {text!r}")


@dataclass(frozen=True)
class QueryAlgorithm:
    n: int
    q: int
    w: int
    unitaries: tuple[np.ndarray, ...]
    output: OutputSpec = field(default_factory=OutputSpec)
    name: str = ""
    # builtin text for each U_t when built by name; lets files round-trip compactly
    builtins: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        dim = self.n * self.q * self.w
        if dim > MAX_DIM:
            raise DimensionMismatch(f"dimension {dim} exceeds cap {MAX_DIM}")
        if not self.unitaries:
            raise ValueError("need at least U_0")
        us = []
        for t, u in enumerate(self.unitaries):
            u = np.asarray(u, dtype=complex)
            if u.shape != (dim, dim):
                raise DimensionMismatch(f"U_{t} has shape {u.shape}, expected {(dim, dim)}")
            if not np.allclose(u.conj().T @ u, np.eye(dim), rtol=0, atol=UNITARY_ATOL):
                raise ValueError(f"U_{t} is not unitary within {UNITARY_ATOL}")
            u.setflags(write=False)
            us.append(u)
        object.__setattr__(self, "unitaries", tuple(us))

    @property
    def T(self) -> int:
        return len(self.unitaries) - 1

    @property
    def dim(self) -> int:
        return self.n * self.q * self.w

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.n, self.q, self.w)

    def with_output(self, output: OutputSpec) -> "QueryAlgorithm":
        return QueryAlgorithm(self.n, self.q, self.w, self.unitaries, output, self.name, self.builtins)


# ------------------------------------------------------------------ builders

def dft(d: int) -> np.ndarray:
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / math.sqrt(d)


def _on_index(m: np.ndarray, n: int, q: int, w: int) -> np.ndarray:
    return np.kron(m, np.eye(q * w))


def _on_answer(m: np.ndarray, n: int, q: int, w: int) -> np.ndarray:
    return np.kron(np.kron(np.eye(n), m), np.eye(w))


def _index_swap(n: int, i: int) -> np.ndarray:
    p = np.eye(n)
    p[[0, i]] = p[[i, 0]]
    return p


def _answer_ry(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def builtin_unitary(name: str, args: Sequence[str], n: int, q: int, w: int) -> np.ndarray:
    """One named gate on the full ``n*q*w`` space."""
    dim = n * q * w
    if name == "identity":
        return np.eye(dim, dtype=complex)
    if name == "uniform-superposition":
        return _on_index(dft(n), n, q, w)
    if name == "grover-diffusion":
        s = np.full((n, n), 2.0 / n)
        return _on_index(s - np.eye(n), n, q, w)
    if name == "index-prepare":
        return _on_index(_index_swap(n, int(args[0])), n, q, w)
    if name == "controlled-phase":
        return _on_answer(np.diag(np.exp(2j * np.pi * np.arange(q) / q)), n, q, w)
    if name == "answer-not":
        return _on_answer(np.roll(np.eye(q), 1, axis=0), n, q, w)
    if name == "answer-hadamard":
        return _on_answer(dft(q), n, q, w)
    if name == "answer-ry":
        if q != 2:
            raise ValueError("answer-ry needs q = 2")
        return _on_answer(_answer_ry(float(args[0])), n, q, w)
    if name == "haar":
        return unitary_group.rvs(dim, random_state=int(args[0]))
    raise ValueError(f"unknown builtin {name!r}")


def compose_builtins(spec: str, n: int, q: int, w: int) -> np.ndarray:
    """``"a ; b x ; c"`` applies ``a`` first, then ``b x``, then ``c``."""
    u = np.eye(n * q * w, dtype=complex)
    for part in spec.split(";"):
        words = part.split()
        if not words:
            continue
        u = builtin_unitary(words[0], words[1:], n, q, w) @ u
    return u


def from_builtins(
    n: int, q: int, w: int, specs: Sequence[str], output: OutputSpec | None = None, name: str = ""
) -> QueryAlgorithm:
    us = tuple(compose_builtins(s, n, q, w) for s in specs)
    return QueryAlgorithm(n, q, w, us, output or OutputSpec(), name, tuple(specs))
