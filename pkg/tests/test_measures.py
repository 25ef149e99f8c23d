"""Combinatorial, polynomial and spectral measures.

The brute-force helpers below are deliberately naive re-derivations, used as
independent oracles for the library's faster routines.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from qdist import boolfn as bf
from qdist import measures as m
from qdist.boolfn import PartialAssignment, PartialFunction
from qdist.catalog import default_catalog
from qdist.errors import AlphabetUnsupported
from qdist.measures.polynomial import approx_feasible
from qdist.report import Provenance


def brute_D(f):
    if f.is_constant():
        return 0
    best = math.inf
    for i in range(f.n):
        sub = [bf.restrict(f, i, a) for a in range(f.q) if any(x[i] == a for x in f.domain)]
        best = min(best, 1 + max(brute_D(g) for g in sub))
    return best


def brute_s(f):
    return max(
        sum(1 for i in range(f.n) if bf.flip(x, {i}) in f and f(bf.flip(x, {i})) != f(x)) for x in f.domain
    )


def brute_C(f):
    best = 0
    for x in f.domain:
        for k in range(f.n + 1):
            if any(
                m.is_certificate(f, PartialAssignment.of(x, S)) for S in itertools.combinations(range(f.n), k)
            ):
                best = max(best, k)
                break
    return best


def brute_deg(f):
    # Moebius transform over the full cube
    coeffs = {}
    for S in range(1 << f.n):
        c = 0
        for T in range(1 << f.n):
            if T & ~S:
                continue
            x = bf.decode(T, f.n)
            c += (-1) ** (bin(S).count("1") - bin(T).count("1")) * f(x)
        coeffs[S] = c
    return max((bin(S).count("1") for S, c in coeffs.items() if c), default=0)


ALL3 = [PartialFunction.from_truth_table(3, bits) for bits in itertools.product((0, 1), repeat=8)]


class TestDecisionTree:
    def test_or4(self):
        r = m.dtree_complexity(bf.OR(4))
        assert r.value == 4 and r.is_exact

    def test_constant(self):
        assert m.dtree_complexity(bf.constant(3, 1)).value == 0

    def test_index(self):
        assert m.dtree_complexity(bf.INDEX(1)).value == 2

    def test_against_recursion(self):
        for f in ALL3[::7]:
            assert m.dtree_complexity(f).value == brute_D(f)

    def test_partial(self):
        assert m.dtree_complexity(bf.promise_or(4)).value == brute_D(bf.promise_or(4))


class TestCertificates:
    def test_or4_zero(self):
        a = m.find_certificate(bf.OR(4), "0000")
        assert a.positions == {0, 1, 2, 3}
        assert m.certificate_complexity(bf.OR(4)).value == 4

    def test_or4_single_one(self):
        a = m.find_certificate(bf.OR(4), "0100")
        assert a.as_dict() == {1: 1}

    def test_constant(self):
        assert len(m.find_certificate(bf.constant(2, 0), "01")) == 0

    def test_is_certificate(self):
        assert m.is_certificate(bf.OR(2), PartialAssignment.from_dict(2, {0: 1}))
        assert not m.is_certificate(bf.OR(2), PartialAssignment.from_dict(2, {0: 0}))
        assert not m.is_certificate(bf.AND(2), PartialAssignment.from_dict(2, {}))

    def test_against_subsets(self):
        for f in ALL3[::5]:
            assert m.certificate_complexity(f).value == brute_C(f)


class TestSensitivity:
    def test_or4(self):
        assert m.sensitivity(bf.OR(4)).value == 4
        assert m.block_sensitivity(bf.OR(4)).value == 4

    def test_parity3(self):
        assert m.sensitivity(bf.PARITY(3)).value == 3
        assert m.block_sensitivity(bf.PARITY(3)).value == 3

    def test_constant(self):
        assert m.sensitivity(bf.constant(2, 0)).value == 0
        assert m.block_sensitivity(bf.constant(2, 0)).value == 0

    def test_q4_rejected(self):
        with pytest.raises(AlphabetUnsupported):
            m.sensitivity(bf.sabotage(bf.AND(2)))

    def test_against_flips(self):
        for f in ALL3:
            assert m.sensitivity(f).value == brute_s(f)


class TestMinimalBlocks:
    def test_or4_zero(self):
        assert set(m.minimal_sensitive_blocks(bf.OR(4), "0000").blocks) == {frozenset({i}) for i in range(4)}

    def test_and4_one(self):
        assert set(m.minimal_sensitive_blocks(bf.AND(4), "1111").blocks) == {frozenset({i}) for i in range(4)}

    def test_or4_single_one(self):
        assert m.minimal_sensitive_blocks(bf.OR(4), "1000").blocks == (frozenset({0}),)

    def test_parity2_pairs_not_minimal(self):
        blocks = m.minimal_sensitive_blocks(bf.PARITY(2), "00").blocks
        assert set(blocks) == {frozenset({0}), frozenset({1})}


class TestFractionalBlockSensitivity:
    def test_or4(self):
        r = m.fractional_block_sensitivity(bf.OR(4))
        assert r.value == 4 and r.provenance is Provenance.PROXY

    def test_and2(self):
        assert m.fractional_block_sensitivity(bf.AND(2)).value == 2

    def test_constant(self):
        assert m.fractional_block_sensitivity(bf.constant(3, 0)).value == 0

    def test_between_bs_and_C(self):
        for f in ALL3[::11]:
            v = m.fractional_block_sensitivity(f).value
            assert isinstance(v, (int, Fraction))
            assert m.block_sensitivity(f).value <= v <= m.certificate_complexity(f).value


class TestDegrees:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_parity_and(self, n):
        assert m.exact_degree(bf.PARITY(n)).value == n
        assert m.exact_degree(bf.AND(n)).value == n

    def test_constant(self):
        assert m.exact_degree(bf.constant(3, 1)).value == 0
        assert m.approx_degree(bf.constant(3, 1)).value == 0

    def test_against_moebius(self):
        for f in ALL3[::3]:
            assert m.exact_degree(f).value == brute_deg(f)

    def test_parity3(self):
        assert not approx_feasible(bf.PARITY(3), 2)
        assert m.approx_degree(bf.PARITY(3)).value == 3

    def test_and2_bases_agree(self):
        a = m.approx_degree(bf.AND(2), basis="monomial")
        b = m.approx_degree(bf.AND(2), basis="fourier")
        assert a.value == b.value == 1

    def test_bases_agree_on_all_3bit(self):
        for f in ALL3[::9]:
            assert m.approx_degree(f).value == m.approx_degree(f, basis="fourier").value

    @pytest.mark.parametrize("name", ["OR2", "AND3", "MAJ3", "PARITY2", "IND1", "UOR4"])
    def test_monotone_in_error(self, name):
        f = default_catalog().get(name)
        errs = [Fraction(1, 3), Fraction(1, 6), Fraction(1, 12)]
        degs = [m.approx_degree(f, e).value for e in errs]
        assert degs == sorted(degs)

    def test_partial_domain_only(self):
        assert m.approx_degree(bf.promise_or(4)).value == 1


class TestSpectral:
    def test_or2(self):
        r = m.adv(bf.OR(2))
        assert abs(r.value - math.sqrt(2)) <= 1e-4

    def test_or4(self):
        assert abs(m.adv(bf.OR(4)).value - 2) <= 1e-4

    def test_gen_adv_dominates(self):
        for f in (bf.OR(2), bf.PARITY(2), bf.MAJ(3)):
            assert m.adv(f).value <= m.gen_adv(f).value + 2e-4

    def test_qd_bounds_or2(self):
        lo, hi = m.qd_bounds(bf.OR(2))
        assert abs(lo.value - math.sqrt(2)) <= 1e-4
        assert lo.value <= hi.value + 2e-4
        assert lo.provenance is Provenance.PROXY

    def test_qd_bounds_constant(self):
        lo, hi = m.qd_bounds(bf.constant(2, 1))
        assert lo.value == hi.value == 0

    def test_qd_bounds_composed(self):
        lo, _ = m.qd_bounds(bf.compose_full(bf.AND(2), bf.AND(2)))
        assert abs(lo.value - 2) <= 1e-3


class TestChain:
    @pytest.mark.parametrize("f", ALL3[::17])
    def test_chain_3bit(self, f):
        s = m.sensitivity(f).value
        bs = m.block_sensitivity(f).value
        fbs = m.fractional_block_sensitivity(f).value
        C = m.certificate_complexity(f).value
        D = m.dtree_complexity(f).value
        assert s <= bs <= fbs <= C <= D <= f.n
        assert m.approx_degree(f).value <= m.exact_degree(f).value <= D

    def test_random_4bit_sample(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            f = PartialFunction.from_truth_table(4, rng.integers(0, 2, 16).tolist())
            D = m.dtree_complexity(f).value
            assert m.certificate_complexity(f).value <= D
            assert m.exact_degree(f).value <= D
