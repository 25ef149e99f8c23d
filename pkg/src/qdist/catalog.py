"""Named function catalogs.

One function per line::

    OR4        4 2 builtin OR 4
    IND1oID1   3 2 builtin IND 1 ID1
    MYF        2 2 table 00:0 01:1 10:1

``builtin`` lines name a constructor and its arguments; arguments that are
not integers refer to functions defined earlier in the same catalog.
``table`` lines list the domain explicitly (``*``/``†`` allowed for q = 4).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from . import boolfn as bf
from .boolfn import PartialFunction, format_string
from .errors import ArityOverflow, UnknownFunction

DEFAULT_CAP = 1 << 20


def content_hash(f: PartialFunction) -> str:
    """SHA-256 over ``n``, ``q`` and the sorted ``(string, value)`` table."""
    h = hashlib.sha256(f"{f.n}:{f.q}:".encode())
    for x, v in f.table.items():
        h.update((",".join(map(str, x)) + f"={v};").encode())
    return h.hexdigest()


# ------------------------------------------------------------------ constructors
# each entry: (argument kinds, domain-size estimate, builder); "i" = int, "f" = function

def _total(n: int, q: int = 2) -> int:
    return q**n


_CTORS: dict[str, tuple[str, Callable[..., int], Callable[..., PartialFunction]]] = {
    "OR": ("i", lambda n: _total(n), bf.OR),
    "AND": ("i", lambda n: _total(n), bf.AND),
    "PARITY": ("i", lambda n: _total(n), bf.PARITY),
    "MAJ": ("i", lambda n: _total(n), bf.MAJ),
    "ID": ("", lambda: 2, bf.identity),
    "CONST": ("ii", lambda n, v: _total(n), bf.constant),
    "INDEX": ("i", lambda k: 2**k * 2 ** (2**k), bf.INDEX),
    "UOR": ("i", lambda n: n + 1, bf.promise_or),
    "COLLISION": ("i", lambda n: _total(n, n), bf.collision),
    "IND": ("if", lambda k, f: len(f) ** k * 2 ** (2**k), lambda k, f: bf.compose_index(f, k)),
    "UIND": ("if", lambda k, f: len(f) ** k * 2 ** (2**k), lambda k, f: bf.compose_uind(f, k)),
    "SAB": ("f", lambda f: 2 * 3**f.n, bf.sabotage),
    "COMPOSE": ("ff", lambda f, g: len(g) ** f.n, bf.compose_full),
}
_ALIASES = {"COMP": "COMPOSE", "ID1": "ID"}


def constructors() -> list[str]:
    return sorted(_CTORS)


@dataclass(frozen=True)
class Entry:
    name: str
    function: PartialFunction
    source: str  # the catalog line body after the name

    def line(self) -> str:
        f = self.function
        return f"{self.name} {f.n} {f.q} {self.source}"


class Catalog:
    """Ordered ``name -> function`` map with the text lines that built it."""

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = cap
        self._entries: dict[str, Entry] = {}

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self) -> Iterator[Entry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def names(self) -> list[str]:
        return list(self._entries)

    def get(self, name: str) -> PartialFunction:
        try:
            return self._entries[name].function
        except KeyError:
            raise UnknownFunction(f"{name!r} not in catalog; known: {', '.join(self._entries)}") from None

    def add(self, name: str, f: PartialFunction, source: str | None = None) -> Entry:
        if not name or any(c.isspace() for c in name):
            raise ValueError(f"bad function name {name!r}")
        if source is None:
            source = table_source(f)
        entry = Entry(name, f, source)
        self._entries[name] = entry
        return entry

    def build(self, ctor: str, args: list[str]) -> PartialFunction:
        """Evaluate ``CTOR args...``, checking the domain cap before enumerating."""
        ctor = _ALIASES.get(ctor.upper(), ctor.upper())
        if ctor not in _CTORS:
            raise ValueError(f"unknown constructor {ctor!r}; known: {', '.join(constructors())}")
        kinds, estimate, builder = _CTORS[ctor]
        if len(args) != len(kinds):
            raise ValueError(f"{ctor} takes {len(kinds)} argument(s), got {len(args)}")
        values = [int(a) if k == "i" else self.get(a) for k, a in zip(kinds, args)]
        size = estimate(*values)
        if size > self.cap:
            raise ArityOverflow(f"{ctor} {' '.join(args)} would enumerate ~{size} strings, cap is {self.cap}")
        return builder(*values)

    def add_line(self, line: str) -> Entry | None:
        text = line.split("#", 1)[0].strip()
        if not text:
            return None
        parts = text.split()
        if len(parts) < 4:
            raise ValueError(f"catalog line too short: {line!r}")
        name, n, q, kind, rest = parts[0], int(parts[1]), int(parts[2]), parts[3], parts[4:]
        if kind == "builtin":
            if not rest:
                raise ValueError(f"builtin line without a constructor: {line!r}")
            f = self.build(rest[0], rest[1:])
        elif kind == "table":
            table = {}
            for item in rest:
                x, _, v = item.rpartition(":")
                table[x] = int(v)
            f = PartialFunction(n, q, table)
        else:
            raise ValueError(f"unknown entry kind {kind!r}")
        if (f.n, f.q) != (n, q):
            raise ValueError(f"{name}: header says n={n} q={q}, built n={f.n} q={f.q}")
        f = PartialFunction(f.n, f.q, f.table, name=name)
        return self.add(name, f, " ".join([kind] + rest))

    def compose(self, spec: str) -> Entry:
        """``IND k f`` / ``UIND k f`` / ``SAB f`` / ``COMP f g``, appended under a derived name."""
        parts = spec.split()
        if not parts:
            raise ValueError("empty compose spec")
        ctor = _ALIASES.get(parts[0].upper(), parts[0].upper())
        f = self.build(ctor, parts[1:])
        name = derived_name(ctor, parts[1:])
        f = PartialFunction(f.n, f.q, f.table, name=name)
        return self.add(name, f, "builtin " + " ".join([ctor] + parts[1:]))

    def dumps(self) -> str:
        return "".join(e.line() + "\n" for e in self)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str, cap: int = DEFAULT_CAP) -> "Catalog":
        cat = cls(cap)
        for line in text.splitlines():
            cat.add_line(line)
        return cat

    @classmethod
    def load(cls, path: str | Path, cap: int = DEFAULT_CAP) -> "Catalog":
        return cls.loads(Path(path).read_text(), cap)


def derived_name(ctor: str, args: list[str]) -> str:
    if ctor in ("IND", "UIND"):
        return f"{ctor}{args[0]}o{args[1]}"
    if ctor == "SAB":
        return f"SAB{args[0]}"
    if ctor == "COMPOSE":
        return f"{args[0]}o{args[1]}"
    return ctor + "".join(args)


def table_source(f: PartialFunction) -> str:
    sab = f.q == 4
    if f.q > 10 and not sab:
        raise ValueError("table lines need single-character letters (q <= 10)")
    return "table " + " ".join(f"{format_string(x, sabotage=sab)}:{v}" for x, v in f.table.items())


DEFAULT_CATALOG = """\
ID1         1 2 builtin ID
OR2         2 2 builtin OR 2
OR3         3 2 builtin OR 3
OR4         4 2 builtin OR 4
AND2        2 2 builtin AND 2
AND3        3 2 builtin AND 3
AND4        4 2 builtin AND 4
PARITY2     2 2 builtin PARITY 2
PARITY3     3 2 builtin PARITY 3
PARITY4     4 2 builtin PARITY 4
MAJ3        3 2 builtin MAJ 3
UOR4        4 2 builtin UOR 4
COLLISION4  4 4 builtin COLLISION 4
IND1        3 2 builtin INDEX 1
AND2oAND2   4 2 builtin COMPOSE AND2 AND2
SABAND2     2 4 builtin SAB AND2
"""


def default_catalog(cap: int = DEFAULT_CAP) -> Catalog:
    return Catalog.loads(DEFAULT_CATALOG, cap)
