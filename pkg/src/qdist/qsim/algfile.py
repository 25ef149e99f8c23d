"""Text format for query algorithms.

::

    # comment
    n 4
    q 2
    w 1
    T 1
    output pure                       # or: reduced index,answer / dephase answer
    unitary builtin uniform-superposition ; answer-not ; answer-hadamard
    unitary matrix
    <dim rows, each 2*dim numbers: re im re im ...>

Header keys may come in any order but precede the first ``unitary`` line.
Numbers are written with ``repr`` so a write/read round trip is bit-exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .algorithm import OutputSpec, QueryAlgorithm, compose_builtins


def loads(text: str, name: str = "") -> QueryAlgorithm:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    header: dict[str, str] = {}
    k = 0
    while k < len(lines) and not lines[k].startswith("unitary"):
        key, _, value = lines[k].partition(" ")
        header[key] = value.strip()
        k += 1
    try:
        n, q, w, T = (int(header[key]) for key in ("n", "q", "w", "T"))
    except KeyError as exc:
        raise ValueError(f"missing header field {exc}") from None
    output = OutputSpec.parse(header.get("output", "pure"))
    dim = n * q * w
    unitaries, builtins = [], []
    while k < len(lines):
        kind = lines[k].split(None, 2)
        if kind[0] != "unitary" or len(kind) < 2:
            raise ValueError(f"expected a unitary block, got {lines[k]!r}")
        if kind[1] == "builtin":
            spec = kind[2] if len(kind) > 2 else "identity"
            unitaries.append(compose_builtins(spec, n, q, w))
            builtins.append(spec)
            k += 1
        elif kind[1] == "matrix":
            rows = []
            for r in range(dim):
                nums = [float(v) for v in lines[k + 1 + r].split()]
                if len(nums) != 2 * dim:
                    raise ValueError(f"matrix row {r} has {len(nums)} numbers, expected {2 * dim}")
                rows.append(np.array(nums[0::2]) + 1j * np.array(nums[1::2]))
            unitaries.append(np.array(rows))
            builtins.append("")
            k += 1 + dim
        else:
            raise ValueError(f"unknown unitary kind {kind[1]!r}")
    if len(unitaries) != T + 1:
        raise ValueError(f"header says T = {T} but file holds {len(unitaries)} unitaries")
    keep_builtins = tuple(builtins) if all(builtins) else ()
    return QueryAlgorithm(n, q, w, tuple(unitaries), output, name, keep_builtins)


def dumps(alg: QueryAlgorithm, matrices: bool = False) -> str:
    out = [f"n {alg.n}", f"q {alg.q}", f"w {alg.w}", f"T {alg.T}", f"output {alg.output.describe()}"]
    for t, u in enumerate(alg.unitaries):
        if alg.builtins and not matrices:
            out.append(f"unitary builtin {alg.builtins[t]}")
            continue
        out.append("unitary matrix")
        for row in u:
            out.append(" ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row))
    return "\n".join(out) + "\n"


def load(path: str | Path) -> QueryAlgorithm:
    path = Path(path)
    return loads(path.read_text(), name=path.stem)


def dump(alg: QueryAlgorithm, path: str | Path, matrices: bool = False) -> None:
    Path(path).write_text(dumps(alg, matrices))
