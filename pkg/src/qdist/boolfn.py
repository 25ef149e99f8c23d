"""Partial functions over finite alphabets and the constructors built on them.

Strings are tuples of letters (ints in ``range(q)``); positions are 0-based.
Text input such as ``"01*†"`` is accepted anywhere a string is expected, with
``*`` and ``†`` read as letters 2 and 3 (the sabotage alphabet).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    AlphabetUnsupported,
    EmptyDomain,
    EmptySabotageSet,
    InconsistentAssignment,
    OutOfDomain,
)

Letters = tuple[int, ...]
Block = frozenset[int]

STAR = 2
DAGGER = 3
_SYMBOL_TO_LETTER = {"*": STAR, "†": DAGGER, "+": DAGGER}
_SABOTAGE_SYMBOLS = "01*†"


def parse_string(x: str | Sequence[int]) -> Letters:
    """Turn ``"0110"``/``"01*†"`` (or any int sequence) into a letter tuple.

    Separators ``|``, spaces and underscores are ignored so composed inputs can
    be written as ``"10|0100"``.
    """
    if isinstance(x, str):
        out = []
        for ch in x:
            if ch in "| _":
                continue
            if ch in _SYMBOL_TO_LETTER:
                out.append(_SYMBOL_TO_LETTER[ch])
            elif ch.isdigit():
                out.append(int(ch))
            else:
                raise ValueError(f"unrecognised letter {ch!r} in {x!r}")
        return tuple(out)
    return tuple(int(a) for a in x)


def format_string(x: Sequence[int], sabotage: bool = False) -> str:
    if sabotage:
        return "".join(_SABOTAGE_SYMBOLS[a] for a in x)
    if any(a > 9 for a in x):
        return ",".join(str(a) for a in x)
    return "".join(str(a) for a in x)


def encode(x: Sequence[int], q: int = 2) -> int:
    """Base-q code of a string, position 0 most significant."""
    code = 0
    for a in x:
        code = code * q + a
    return code


def decode(code: int, n: int, q: int = 2) -> Letters:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        code, out[i] = divmod(code, q)
    return tuple(out)


class PartialFunction:
    """A 0/1-valued function on an explicit domain of length-``n`` strings.

    Instances are immutable. ``table`` maps each domain string to its value.
    """

    __slots__ = ("n", "q", "name", "_table", "_codes", "_key")

    def __init__(
        self,
        n: int,
        q: int,
        table: Mapping[Sequence[int] | str, int],
        name: str | None = None,
    ):
        if n < 0:
            raise ValueError("n must be nonnegative")
        if q < 2:
            raise ValueError("alphabet size q must be at least 2")
        clean: dict[Letters, int] = {}
        for x, v in table.items():
            xs = parse_string(x)
            if len(xs) != n:
                raise ValueError(f"string {xs} has length {len(xs)}, expected {n}")
            if any(a < 0 or a >= q for a in xs):
                raise ValueError(f"string {xs} has letters outside range({q})")
            if v not in (0, 1):
                raise ValueError(f"value {v!r} at {xs} is not a bit")
            clean[xs] = int(v)
        if not clean:
            raise EmptyDomain("domain must be nonempty")
        self.n = n
        self.q = q
        self.name = name
        self._table = MappingProxyType(dict(sorted(clean.items())))
        self._codes: dict[int, int] | None = None
        self._key: tuple | None = None

    @classmethod
    def from_callable(
        cls,
        n: int,
        q: int,
        fn: Callable[[Letters], int],
        domain: Iterable[Sequence[int]] | None = None,
        name: str | None = None,
    ) -> "PartialFunction":
        if domain is None:
            domain = itertools.product(range(q), repeat=n)
        return cls(n, q, {tuple(x): fn(tuple(x)) for x in domain}, name=name)

    @classmethod
    def from_truth_table(cls, n: int, bits: Sequence[int], name: str | None = None):
        """Total binary function; ``bits[c]`` is the value on the string with code ``c``."""
        if len(bits) != 1 << n:
            raise ValueError("truth table length must be 2**n")
        return cls(n, 2, {decode(c, n): int(b) for c, b in enumerate(bits)}, name=name)

    @property
    def table(self) -> Mapping[Letters, int]:
        return self._table

    @property
    def domain(self) -> tuple[Letters, ...]:
        return tuple(self._table)

    @property
    def is_total(self) -> bool:
        return len(self._table) == self.q**self.n

    @property
    def codes(self) -> dict[int, int]:
        """Domain as ``{base-q code: value}``; the fast path for bitmask work."""
        if self._codes is None:
            self._codes = {encode(x, self.q): v for x, v in self._table.items()}
        return self._codes

    def inputs_with_value(self, b: int) -> list[Letters]:
        return [x for x, v in self._table.items() if v == b]

    def is_constant(self) -> bool:
        return len(set(self._table.values())) == 1

    def key(self) -> tuple:
        """Hashable identity: (n, q, sorted table items)."""
        if self._key is None:
            self._key = (self.n, self.q, tuple(self._table.items()))
        return self._key

    def __call__(self, x: Sequence[int] | str) -> int:
        return evaluate(self, x)

    def __contains__(self, x) -> bool:
        return parse_string(x) in self._table

    def __len__(self) -> int:
        return len(self._table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialFunction):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __reduce__(self):
        # the mapping proxy does not pickle; rebuild from a plain dict (worker processes)
        return (PartialFunction, (self.n, self.q, dict(self._table), self.name))

    def __repr__(self) -> str:
        kind = "total" if self.is_total else "partial"
        label = f"{self.name} " if self.name else ""
        return f"<PartialFunction {label}n={self.n} q={self.q} {kind} |dom|={len(self)}>"


@dataclass(frozen=True)
class PartialAssignment:
    """Letters fixed at some positions of a length-``n`` string."""

    n: int
    letters: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        seen = set()
        for pos, _ in self.letters:
            if not 0 <= pos < self.n:
                raise ValueError(f"position {pos} outside range({self.n})")
            if pos in seen:
                raise ValueError(f"position {pos} assigned twice")
            seen.add(pos)

    @classmethod
    def from_dict(cls, n: int, letters: Mapping[int, int]) -> "PartialAssignment":
        return cls(n, frozenset(letters.items()))

    @classmethod
    def of(cls, x: Sequence[int], positions: Iterable[int]) -> "PartialAssignment":
        """The restriction of ``x`` to ``positions``."""
        return cls(len(x), frozenset((i, x[i]) for i in positions))

    def as_dict(self) -> dict[int, int]:
        return dict(self.letters)

    @property
    def positions(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.letters)

    def consistent_with(self, x: Sequence[int]) -> bool:
        return all(x[p] == a for p, a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        slots = ["."] * self.n
        for p, a in self.letters:
            slots[p] = _SABOTAGE_SYMBOLS[a] if a < 4 else str(a)
        return "".join(slots)


def make_block(positions: Iterable[int], n: int) -> Block:
    block = frozenset(positions)
    if not block:
        raise ValueError("a block must be nonempty")
    if any(not 0 <= i < n for i in block):
        raise ValueError(f"block {sorted(block)} not within range({n})")
    return block


def evaluate(f: PartialFunction, x: Sequence[int] | str) -> int:
    xs = parse_string(x)
    try:
        return f.table[xs]
    except KeyError:
        raise OutOfDomain(f"{format_string(xs)} is not in the domain of {f.name or 'f'}") from None


def flip(x: Sequence[int] | str, block: Iterable[int], q: int = 2) -> Letters:
    """``x`` with every position of ``block`` flipped."""
    xs = parse_string(x)
    if q != 2 or any(a > 1 for a in xs):
        raise AlphabetUnsupported("flip is defined for binary strings only")
    out = list(xs)
    for i in block:
        out[i] ^= 1
    return tuple(out)


def subfunction_fx(f: PartialFunction, x: Sequence[int] | str) -> PartialFunction:
    """The function that is 1 at ``x`` and 0 on every input where ``f`` differs from ``f(x)``."""
    xs = parse_string(x)
    fx = evaluate(f, xs)
    table = {y: 0 for y, v in f.table.items() if v != fx}
    table[xs] = 1
    return PartialFunction(f.n, f.q, table, name=f"{f.name or 'f'}^{format_string(xs)}")


def _require_binary(*fs: PartialFunction) -> None:
    for f in fs:
        if f.q != 2:
            raise AlphabetUnsupported(f"{f.name or 'function'} has alphabet size {f.q}, need 2")


def compose_full(f: PartialFunction, g: PartialFunction) -> PartialFunction:
    """``f∘g``: ``f`` applied to the ``g``-values of ``n_f`` consecutive ``g``-inputs."""
    _require_binary(f, g)
    table = {}
    for blocks in itertools.product(g.table.items(), repeat=f.n):
        outer = tuple(v for _, v in blocks)
        if outer in f.table:
            table[tuple(a for y, _ in blocks for a in y)] = f.table[outer]
    if not table:
        raise EmptyDomain("no inner combination lands in the outer domain")
    return PartialFunction(f.n * g.n, 2, table, name=f"{f.name or 'f'}o{g.name or 'g'}")


def _pointer(bits: Sequence[int]) -> int:
    # most significant bit first
    p = 0
    for b in bits:
        p = 2 * p + b
    return p


def compose_index(f: PartialFunction, k: int) -> PartialFunction:
    """``Ind_k ∘_k f`` on ``n*k + 2**k`` positions.

    The ``k`` copies of ``f`` produce a pointer (most significant bit first)
    into the trailing ``2**k``-bit array.
    """
    _require_binary(f)
    if k < 1:
        raise ValueError("k must be positive")
    table = {}
    for blocks in itertools.product(f.table.items(), repeat=k):
        head = tuple(a for y, _ in blocks for a in y)
        p = _pointer([v for _, v in blocks])
        for array in itertools.product((0, 1), repeat=1 << k):
            table[head + array] = array[p]
    return PartialFunction(f.n * k + (1 << k), 2, table, name=f"IND{k}o{f.name or 'f'}")


def compose_uind(f: PartialFunction, k: int) -> PartialFunction:
    """``UInd_k ∘_k f`` on ``n*k + 2*2**k`` positions.

    The array holds ``2**k`` (value, marker) pairs. In the domain the pointed-to
    pair has marker 1 and every other pair has marker 0; the output is the
    value bit of the pointed-to pair.
    """
    _require_binary(f)
    if k < 1:
        raise ValueError("k must be positive")
    cells = 1 << k
    table = {}
    for blocks in itertools.product(f.table.items(), repeat=k):
        head = tuple(a for y, _ in blocks for a in y)
        p = _pointer([v for _, v in blocks])
        for firsts in itertools.product((0, 1), repeat=cells):
            array = []
            for j, b in enumerate(firsts):
                array += [b, int(j == p)]
            table[head + tuple(array)] = firsts[p]
    return PartialFunction(f.n * k + 2 * cells, 2, table, name=f"UIND{k}o{f.name or 'f'}")


def sabotaged_inputs(f: PartialFunction) -> list[Letters]:
    """All partial assignments (``*`` at free positions) consistent with both a 0- and a 1-input."""
    _require_binary(f)
    out = []
    for mask in range(1, 1 << f.n):
        stars = [i for i in range(f.n) if mask >> (f.n - 1 - i) & 1]
        seen: dict[Letters, set[int]] = {}
        for x, v in f.table.items():
            proj = tuple(STAR if i in stars else a for i, a in enumerate(x))
            seen.setdefault(proj, set()).add(v)
        out.extend(z for z, vals in seen.items() if len(vals) == 2)
    return sorted(out)


def sabotage(f: PartialFunction) -> PartialFunction:
    """``f_sab`` over ``{0,1,*,†}``: 0 on ``*``-sabotaged inputs, 1 on their ``†`` copies."""
    stars = sabotaged_inputs(f)
    if not stars:
        raise EmptySabotageSet(f"{f.name or 'f'} is constant on its domain")
    table = {}
    for z in stars:
        table[z] = 0
        table[tuple(DAGGER if a == STAR else a for a in z)] = 1
    return PartialFunction(f.n, 4, table, name=f"SAB{f.name or 'f'}")


def negate(f: PartialFunction) -> PartialFunction:
    name = f.name[4:] if f.name and f.name.startswith("NOT_") else f"NOT_{f.name or 'f'}"
    return PartialFunction(f.n, f.q, {x: 1 - v for x, v in f.table.items()}, name=name)


def restrict(f: PartialFunction, position: int, letter: int) -> PartialFunction:
    """Keep the domain strings with ``letter`` at ``position`` and drop that position."""
    if not 0 <= position < f.n:
        raise ValueError(f"position {position} outside range({f.n})")
    if not 0 <= letter < f.q:
        raise ValueError(f"letter {letter} outside range({f.q})")
    table = {x[:position] + x[position + 1 :]: v for x, v in f.table.items() if x[position] == letter}
    if not table:
        raise EmptyDomain(f"no domain string has letter {letter} at position {position}")
    return PartialFunction(f.n - 1, f.q, table)


def restrict_assignment(f: PartialFunction, a: PartialAssignment) -> list[Letters]:
    """Domain strings consistent with ``a``."""
    if a.n != f.n:
        raise InconsistentAssignment(f"assignment length {a.n} != {f.n}")
    return [x for x in f.table if a.consistent_with(x)]


# builtin families

def OR(n: int) -> PartialFunction:
    return PartialFunction.from_callable(n, 2, lambda x: int(any(x)), name=f"OR{n}")


def AND(n: int) -> PartialFunction:
    return PartialFunction.from_callable(n, 2, lambda x: int(all(x)), name=f"AND{n}")


def PARITY(n: int) -> PartialFunction:
    return PartialFunction.from_callable(n, 2, lambda x: sum(x) % 2, name=f"PARITY{n}")


def MAJ(n: int) -> PartialFunction:
    return PartialFunction.from_callable(n, 2, lambda x: int(2 * sum(x) > n), name=f"MAJ{n}")


def identity() -> PartialFunction:
    return PartialFunction(1, 2, {(0,): 0, (1,): 1}, name="ID1")


def constant(n: int, value: int = 0) -> PartialFunction:
    return PartialFunction.from_callable(n, 2, lambda x: value, name=f"CONST{value}_{n}")


def INDEX(k: int) -> PartialFunction:
    """Plain ``Ind_k`` on ``k + 2**k`` bits."""
    return compose_index(identity(), k)


def promise_or(n: int) -> PartialFunction:
    """OR promised that at most one bit is 1 (all-zeros or a unique marked position)."""
    domain = [tuple(0 for _ in range(n))] + [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return PartialFunction.from_callable(n, 2, lambda x: int(any(x)), domain=domain, name=f"UOR{n}")


def collision(n: int) -> PartialFunction:
    """Collision problem on ``[n]^n``: 0 on 1-to-1 inputs, 1 on 2-to-1 inputs."""
    if n % 2:
        raise ValueError("collision needs even n")
    table = {x: 0 for x in itertools.permutations(range(n))}
    for x in itertools.product(range(n), repeat=n):
        counts: dict[int, int] = {}
        for a in x:
            counts[a] = counts.get(a, 0) + 1
        if all(c == 2 for c in counts.values()):
            table[x] = 1
    return PartialFunction(n, n, table, name=f"COLLISION{n}")
