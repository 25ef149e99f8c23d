"""Named algorithms used throughout the experiments."""

from __future__ import annotations

import math

from .algorithm import OutputSpec, QueryAlgorithm, compose_builtins, from_builtins

# |0> -> uniform index, answer |0> -> |->, so the bit oracle acts as a phase oracle
_GROVER_PREP = "uniform-superposition ; answer-not ; answer-hadamard"


def grover(n: int = 4, output: OutputSpec | None = None) -> QueryAlgorithm:
    """One Grover iteration on ``n`` cells (one query).

    For ``n = 4`` and a unique marked cell the index register ends exactly on
    the marked cell; on the all-zeros input it stays uniform.
    """
    return from_builtins(n, 2, 1, [_GROVER_PREP, "grover-diffusion"], output, name=f"grover{n}")


def grover_or_exact(output: OutputSpec | None = None) -> QueryAlgorithm:
    """Two-query zero-error algorithm for OR on 4 bits promised to have at most one 1.

    Query 1 runs Grover to land on the marked cell; query 2 reads that cell
    into a freshly reset answer register.
    """
    specs = [_GROVER_PREP, "grover-diffusion ; answer-hadamard ; answer-not", "identity"]
    return from_builtins(4, 2, 1, specs, output or OutputSpec.bit(), name="grover4-exact")


def with_final_rotation(alg: QueryAlgorithm, theta: float, name: str = "") -> QueryAlgorithm:
    """Append an answer-register ``R_y(theta)``-style rotation to the last unitary."""
    last = compose_builtins(f"answer-ry {theta!r}", alg.n, alg.q, alg.w) @ alg.unitaries[-1]
    builtins = ()
    if alg.builtins:
        builtins = alg.builtins[:-1] + (f"{alg.builtins[-1]} ; answer-ry {theta!r}",)
    return QueryAlgorithm(
        alg.n, alg.q, alg.w, alg.unitaries[:-1] + (last,), alg.output, name or alg.name, builtins
    )


def two_thirds_or(output: OutputSpec | None = None) -> QueryAlgorithm:
    """``grover_or_exact`` blurred so it accepts 1-inputs with probability exactly 2/3
    and 0-inputs with probability exactly 1/3."""
    theta = math.acos(math.sqrt(2 / 3))
    return with_final_rotation(grover_or_exact(output), theta, name="grover4-twothirds")


def point_mass(n: int, position: int, T: int = 1) -> QueryAlgorithm:
    """Puts the index register on ``position`` and keeps it there."""
    specs = [f"index-prepare {position}"] + ["identity"] * T
    return from_builtins(n, 2, 1, specs, name=f"pointmass{n}_{position}")


def input_ignoring(n: int, T: int = 1) -> QueryAlgorithm:
    """All unitaries trivial, output reduced to the index register.

    The oracle still writes ``x_0`` into the answer register, but that register
    is traced out, so the output never depends on the input.
    """
    return from_builtins(n, 2, 1, ["identity"] * (T + 1), OutputSpec(("index",)), name=f"ignore{n}")


def random_algorithm(n: int, T: int, seed: int, q: int = 2, w: int = 1) -> QueryAlgorithm:
    """Haar-random unitaries, reproducible from ``seed``."""
    specs = [f"haar {seed * 1000 + t}" for t in range(T + 1)]
    return from_builtins(n, q, w, specs, name=f"haar{n}_T{T}_s{seed}")


def named(name: str) -> QueryAlgorithm:
    """Resolve the algorithm names accepted on the command line."""
    table = {
        "grover4": lambda: grover(4),
        "grover4-exact": grover_or_exact,
        "grover4-twothirds": two_thirds_or,
    }
    if name in table:
        return table[name]()
    if name.startswith("collision"):
        from ..constructions.quantum import collision_distinguisher

        return collision_distinguisher(int(name[len("collision") :]))
    raise KeyError(f"unknown algorithm {name!r}; known: {sorted(table)} and collisionN")
