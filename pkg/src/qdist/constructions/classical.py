"""Decision trees, exact randomized mixtures, and the RD <-> RS transformations.

All probabilities are ``Fraction``; nothing on this path samples except
``run_randomized``, which is there for demonstration only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence, Union

import numpy as np

from ..boolfn import DAGGER, STAR, PartialAssignment, PartialFunction, parse_string, sabotage
from ..errors import DimensionMismatch, DistinguishingPromiseViolated, NotZeroError

HIT_THRESHOLD = Fraction(1, 12)
TV_THRESHOLD = Fraction(1, 6)


@dataclass(frozen=True)
class Leaf:
    output: Hashable

    @property
    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Node:
    position: int
    children: tuple["DecisionTree", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("an internal node needs one child per letter (at least 2)")

    @property
    def depth(self) -> int:
        return 1 + max(c.depth for c in self.children)


DecisionTree = Union[Leaf, Node]


def check_tree(tree: DecisionTree, n: int, q: int) -> None:
    """Positions in ``range(n)`` and exactly ``q`` children at every node."""
    if isinstance(tree, Leaf):
        return
    if not 0 <= tree.position < n:
        raise DimensionMismatch(f"tree queries position {tree.position} outside range({n})")
    if len(tree.children) != q:
        raise DimensionMismatch(f"node at {tree.position} has {len(tree.children)} children, expected {q}")
    for c in tree.children:
        check_tree(c, n, q)


def run_tree(tree: DecisionTree, x) -> tuple[Hashable, PartialAssignment]:
    xs = parse_string(x)
    read = {}
    while isinstance(tree, Node):
        a = xs[tree.position]
        read[tree.position] = a
        tree = tree.children[a]
    return tree.output, PartialAssignment.from_dict(len(xs), read)


def queries_on(tree: DecisionTree, x) -> int:
    return len(run_tree(tree, x)[1])


def hits_sabotage(tree: DecisionTree, z) -> bool:
    """Does the tree read a ``*`` or ``†`` when run on ``z``?

    Works for trees over ``{0,1}`` too: the walk stops at the first sabotaged cell.
    """
    zs = parse_string(z)
    while isinstance(tree, Node):
        a = zs[tree.position]
        if a in (STAR, DAGGER):
            return True
        tree = tree.children[a]
    return False


# ------------------------------------------------------------------ text form

def tree_to_text(tree: DecisionTree) -> str:
    """``(leaf 1)`` / ``(node 0 <child0> <child1> ...)``; leaf outputs must be ints."""
    if isinstance(tree, Leaf):
        if not isinstance(tree.output, int):
            raise TypeError("only integer leaf outputs serialize")
        return f"(leaf {tree.output})"
    return f"(node {tree.position} " + " ".join(tree_to_text(c) for c in tree.children) + ")"


def tree_from_text(text: str) -> DecisionTree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()

    def parse(k: int) -> tuple[DecisionTree, int]:
        if tokens[k] != "(":
            raise ValueError(f"expected '(' at token {k}")
        kind = tokens[k + 1]
        if kind == "leaf":
            if tokens[k + 3] != ")":
                raise ValueError("leaf takes one value")
            return Leaf(int(tokens[k + 2])), k + 4
        if kind != "node":
            raise ValueError(f"unknown record {kind!r}")
        pos, k = int(tokens[k + 2]), k + 3
        children = []
        while tokens[k] != ")":
            child, k = parse(k)
            children.append(child)
        return Node(pos, tuple(children)), k + 1

    tree, end = parse(0)
    if end != len(tokens):
        raise ValueError("trailing tokens after tree")
    return tree


# ------------------------------------------------------------------ tree families

def read_all_tree(n: int, q: int = 2, output=None) -> DecisionTree:
    """Reads positions ``0..n-1``; leaves hold ``output(x)`` or the string itself."""

    def build(prefix: tuple[int, ...]) -> DecisionTree:
        if len(prefix) == n:
            return Leaf(prefix if output is None else output(prefix))
        return Node(len(prefix), tuple(build(prefix + (a,)) for a in range(q)))

    return build(())


def scan_tree(order: Sequence[int], default: int = 0) -> DecisionTree:
    """Zero-error ``f_sab`` tree: read ``order`` until a ``*`` (answer 0) or ``†`` (answer 1).

    Leaves behind an all-0/1 path are unreachable on ``Dom(f_sab)``; they hold ``default``.
    """
    if not order:
        return Leaf(default)
    rest = scan_tree(order[1:], default)
    return Node(order[0], (rest, rest, Leaf(0), Leaf(1)))


def truncate_and_relabel(tree: DecisionTree, budget: int, n: int, q: int = 2) -> DecisionTree:
    """Stop after ``budget`` queries and label every leaf with the assignment read so far.

    Only the first ``q`` children survive, so a ``{0,1,*,†}`` tree becomes a tree over ``range(q)``.
    """

    def go(t: DecisionTree, read: dict[int, int], left: int) -> DecisionTree:
        if isinstance(t, Leaf) or left == 0:
            return Leaf(PartialAssignment.from_dict(n, read))
        kids = tuple(go(t.children[a], {**read, t.position: a}, left - 1) for a in range(q))
        return Node(t.position, kids)

    return go(tree, {}, budget)


# ------------------------------------------------------------------ randomized algorithms

@dataclass(frozen=True)
class RandomizedAlgorithm:
    """A distribution over decision trees with exact rational weights."""

    n: int
    q: int
    branches: tuple[tuple[Fraction, DecisionTree], ...]
    degenerate: bool = False  # set when built with a zero query budget

    def __post_init__(self):
        branches = tuple((Fraction(w), t) for w, t in self.branches)
        if not branches or any(w < 0 for w, _ in branches):
            raise ValueError("weights must be nonnegative and nonempty")
        if sum(w for w, _ in branches) != 1:
            raise ValueError("weights must sum to exactly 1")
        for _, t in branches:
            check_tree(t, self.n, self.q)
        object.__setattr__(self, "branches", branches)

    @classmethod
    def deterministic(cls, tree: DecisionTree, n: int, q: int = 2) -> "RandomizedAlgorithm":
        return cls(n, q, ((Fraction(1), tree),))

    @classmethod
    def uniform(cls, trees: Iterable[DecisionTree], n: int, q: int = 2) -> "RandomizedAlgorithm":
        trees = list(trees)
        return cls(n, q, tuple((Fraction(1, len(trees)), t) for t in trees))

    @property
    def max_depth(self) -> int:
        return max(t.depth for w, t in self.branches if w)


def uniform_scan(n: int) -> RandomizedAlgorithm:
    """Zero-error ``f_sab`` algorithm: scan positions in a uniformly random order."""
    return RandomizedAlgorithm.uniform((scan_tree(p) for p in itertools.permutations(range(n))), n, 4)


def output_distribution(a: RandomizedAlgorithm, x) -> dict[Hashable, Fraction]:
    dist: dict[Hashable, Fraction] = {}
    for w, t in a.branches:
        if w:
            out = run_tree(t, x)[0]
            dist[out] = dist.get(out, Fraction(0)) + w
    return dist


def run_randomized(a: RandomizedAlgorithm, x, seed: int | np.random.Generator | None = None):
    """Sample one tree and run it. Returns ``(output, queried assignment)``."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    u = Fraction(rng.random())
    acc = Fraction(0)
    for w, t in a.branches:
        acc += w
        if u < acc:
            return run_tree(t, x)
    return run_tree(a.branches[-1][1], x)


def expected_queries(a: RandomizedAlgorithm, x) -> Fraction:
    return sum((w * queries_on(t, x) for w, t in a.branches), Fraction(0))


def cost(a: RandomizedAlgorithm, inputs: Iterable) -> Fraction:
    """Worst-case (over ``inputs``) expected number of queries."""
    return max(expected_queries(a, x) for x in inputs)


def tv_distance(p: dict, r: dict) -> Fraction:
    keys = set(p) | set(r)
    return sum((abs(p.get(k, 0) - r.get(k, 0)) for k in keys), Fraction(0)) / 2


@dataclass(frozen=True)
class CrossTV:
    value: Fraction
    pair: tuple | None


def min_cross_tv(b: RandomizedAlgorithm, f: PartialFunction) -> CrossTV:
    """Exact ``min D_TV(d_x, d_y)`` over ``f(x) != f(y)``; ``value = 1`` if ``f`` is constant."""
    dists = {x: output_distribution(b, x) for x in f.domain}
    best, pair = Fraction(1), None
    for x in f.inputs_with_value(0):
        for y in f.inputs_with_value(1):
            d = tv_distance(dists[x], dists[y])
            if pair is None or d < best:
                best, pair = d, (x, y)
    return CrossTV(best, pair)


def rs_to_rd_transform(a: RandomizedAlgorithm, f: PartialFunction, budget: int | None = None) -> RandomizedAlgorithm:
    """From a zero-error ``f_sab`` algorithm to a distinguishing algorithm for ``f``.

    Each tree is cut after ``budget`` queries and outputs the partial assignment
    it read. ``budget`` defaults to ``ceil(2 * cost(A))``.
    """
    fs = sabotage(f)
    for z, want in fs.table.items():
        for w, t in a.branches:
            if w and run_tree(t, z)[0] != want:
                raise NotZeroError(f"a tree of A answers wrongly on sabotaged input {z}")
    if budget is None:
        budget = math.ceil(2 * cost(a, fs.domain))
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    branches = tuple((w, truncate_and_relabel(t, budget, f.n, f.q)) for w, t in a.branches)
    return RandomizedAlgorithm(f.n, f.q, branches, degenerate=budget == 0)


@dataclass(frozen=True)
class RSFromRD:
    hit_probability: dict
    min_hit: Fraction
    expected_queries: Fraction
    passed: bool


def rd_to_rs_transform(b: RandomizedAlgorithm, f: PartialFunction) -> RSFromRD:
    """Repeat ``B`` until it reads a ``*``/``†``; exact per-input hit probabilities.

    ``expected_queries`` is the bound ``12 * (max depth of B)`` from repeat-until-hit.
    """
    tv = min_cross_tv(b, f)
    if tv.value < TV_THRESHOLD:
        raise DistinguishingPromiseViolated(
            f"min cross TV {tv.value} < {TV_THRESHOLD} at pair {tv.pair}"
        )
    fs = sabotage(f)
    hits = {z: sum((w for w, t in b.branches if hits_sabotage(t, z)), Fraction(0)) for z in fs.domain}
    low = min(hits.values())
    return RSFromRD(hits, low, 12 * Fraction(b.max_depth), low >= HIT_THRESHOLD)
