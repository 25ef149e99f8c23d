from __future__ import annotations

from typing import Callable

from ..errors import NoFeasiblePoint


def bisect_feasibility(pred: Callable[[int], bool], lo: int, hi: int) -> int:
    """Least ``d`` in ``[lo, hi]`` with ``pred(d)``, for ``pred`` monotone nondecreasing."""
    if lo > hi:
        raise ValueError("empty range")
    if not pred(hi):
        raise NoFeasiblePoint(f"predicate false at the upper end {hi}")
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
