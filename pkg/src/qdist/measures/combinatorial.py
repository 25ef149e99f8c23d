"""Decision-tree, certificate and sensitivity measures by exhaustive search.

Binary functions go through a bitmask fast path: position ``i`` of an
``n``-bit string is bit ``n-1-i`` of its code, and a block is a mask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from ..boolfn import (
    Block,
    Letters,
    PartialAssignment,
    PartialFunction,
    encode,
    parse_string,
)
from ..errors import AlphabetUnsupported, InconsistentAssignment, OutOfDomain
from ..numopt.lp import LE, RationalLP, lp_solve
from ..report import MeasureReport, Provenance


def _require_binary(f: PartialFunction) -> None:
    if f.q != 2:
        raise AlphabetUnsupported(f"{f.name or 'function'} has alphabet size {f.q}, need 2")


def _domain_point(f: PartialFunction, x) -> Letters:
    xs = parse_string(x)
    if xs not in f.table:
        raise OutOfDomain(f"{xs} is not in the domain")
    return xs


@lru_cache(maxsize=None)
def masks_by_weight(n: int) -> tuple[int, ...]:
    return tuple(sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m)))


def mask_to_block(mask: int, n: int) -> Block:
    return frozenset(i for i in range(n) if mask >> (n - 1 - i) & 1)


def block_to_mask(block: Iterable[int], n: int) -> int:
    m = 0
    for i in block:
        m |= 1 << (n - 1 - i)
    return m


# ---------------------------------------------------------------- decision trees

def _dtree(n: int, items: tuple, memo: dict) -> int:
    hit = memo.get(items)
    if hit is not None:
        return hit
    if len({v for _, v in items}) == 1:
        memo[items] = 0
        return 0
    best = n
    for i in range(n):
        groups: dict[int, list] = {}
        for x, v in items:
            groups.setdefault(x[i], []).append((x[:i] + x[i + 1 :], v))
        if len(groups) == 1:
            continue  # this query cannot split the domain
        worst = 0
        for g in groups.values():
            worst = max(worst, _dtree(n - 1, tuple(sorted(g)), memo))
            if 1 + worst >= best:
                break
        best = min(best, 1 + worst)
        if best == 1:
            break
    memo[items] = best
    return best


def dtree_complexity(f: PartialFunction) -> MeasureReport:
    """D(f) by the minimax recursion, memoised on restricted tables."""
    d = _dtree(f.n, tuple(f.table.items()), {})
    return MeasureReport.exact("D", d)


# ---------------------------------------------------------------- certificates

def is_certificate(f: PartialFunction, a: PartialAssignment) -> bool:
    if a.n != f.n:
        raise InconsistentAssignment(f"assignment length {a.n} != {f.n}")
    values = {v for x, v in f.table.items() if a.consistent_with(x)}
    if not values:
        raise InconsistentAssignment("no domain string extends the assignment")
    return len(values) == 1


def _certificate_mask(codes: dict[int, int], cx: int, n: int) -> int:
    v = codes[cx]
    diffs = [cx ^ cy for cy, w in codes.items() if w != v]
    if not diffs:
        return 0
    for mask in masks_by_weight(n):
        if all(d & mask for d in diffs):
            return mask
    raise AssertionError("the full mask always certifies")


def find_certificate(f: PartialFunction, x) -> PartialAssignment:
    """A minimum-size certificate for ``x``."""
    xs = _domain_point(f, x)
    if f.q == 2:
        mask = _certificate_mask(f.codes, encode(xs), f.n)
        return PartialAssignment.of(xs, mask_to_block(mask, f.n))
    v = f.table[xs]
    opposite = [y for y, w in f.table.items() if w != v]
    for size in range(f.n + 1):
        for pos in itertools.combinations(range(f.n), size):
            if all(any(y[i] != xs[i] for i in pos) for y in opposite):
                return PartialAssignment.of(xs, pos)
    raise AssertionError("the full assignment always certifies")


def certificate_complexity(f: PartialFunction) -> MeasureReport:
    if f.q == 2:
        codes = f.codes
        c = max(_certificate_mask(codes, cx, f.n).bit_count() for cx in codes)
    else:
        c = max(len(find_certificate(f, x)) for x in f.table)
    return MeasureReport.exact("C", c)


# ---------------------------------------------------------------- sensitivity

@dataclass(frozen=True)
class SensitiveBlockSet:
    base: Letters
    blocks: tuple[Block, ...]

    def __len__(self) -> int:
        return len(self.blocks)


def _minimal_masks(codes: dict[int, int], cx: int, n: int) -> list[int]:
    v = codes[cx]
    found: list[int] = []
    for mask in masks_by_weight(n):
        if any(b & mask == b for b in found):
            continue
        w = codes.get(cx ^ mask)
        if w is not None and w != v:
            found.append(mask)
    return found


def minimal_sensitive_blocks(f: PartialFunction, x) -> SensitiveBlockSet:
    """Every inclusion-minimal block ``B`` with ``x^B`` in the domain and ``f(x^B) != f(x)``."""
    _require_binary(f)
    xs = _domain_point(f, x)
    masks = _minimal_masks(f.codes, encode(xs), f.n)
    return SensitiveBlockSet(xs, tuple(mask_to_block(m, f.n) for m in masks))


def _local_sensitivity(codes: dict[int, int], cx: int, n: int) -> int:
    v = codes[cx]
    count = 0
    for i in range(n):
        w = codes.get(cx ^ (1 << i))
        if w is not None and w != v:
            count += 1
    return count


def sensitivity(f: PartialFunction) -> MeasureReport:
    _require_binary(f)
    codes = f.codes
    return MeasureReport.exact("s", max(_local_sensitivity(codes, cx, f.n) for cx in codes))


def max_disjoint(masks: Sequence[int]) -> int:
    """Largest number of pairwise disjoint masks (branch and bound)."""
    masks = sorted(masks, key=lambda m: (m.bit_count(), m))
    memo: dict[tuple[int, int], int] = {}

    def go(k: int, used: int) -> int:
        if k == len(masks):
            return 0
        key = (k, used)
        if key in memo:
            return memo[key]
        best = go(k + 1, used)
        if not masks[k] & used:
            best = max(best, 1 + go(k + 1, used | masks[k]))
        memo[key] = best
        return best

    return go(0, 0)


def block_sensitivity(f: PartialFunction) -> MeasureReport:
    _require_binary(f)
    codes = f.codes
    return MeasureReport.exact("bs", max(max_disjoint(_minimal_masks(codes, cx, f.n)) for cx in codes))


def fractional_block_packing(masks: Sequence[int], n: int) -> Fraction:
    """LP value of ``max Σ w_B`` with ``Σ_{B∋i} w_B <= 1`` and ``w >= 0``."""
    if not masks:
        return Fraction(0)
    if all(not (a & b) for a, b in itertools.combinations(masks, 2)):
        return Fraction(len(masks))
    lp = RationalLP(len(masks), [1] * len(masks), bounds=[(0, None)] * len(masks))
    for bit in range(n):
        row = [int(m >> bit & 1) for m in masks]
        if any(row):
            lp.add(row, LE, 1)
    return lp_solve(lp).value


def fractional_block_sensitivity(f: PartialFunction) -> MeasureReport:
    """fbs(f), reported as the randomized-certificate-complexity stand-in."""
    _require_binary(f)
    codes = f.codes
    best = max(fractional_block_packing(_minimal_masks(codes, cx, f.n), f.n) for cx in codes)
    return MeasureReport.exact("fbs", best, Provenance.PROXY, note="Θ of RC; value solved by exact LP")
