"""Partial functions, string helpers and the function constructors.

Positions are 0-based; in 1-based notation ``flip("0000", {0})`` would be
the flip of position 1.
"""

import itertools
import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdist import boolfn as bf
from qdist.boolfn import PartialAssignment, PartialFunction
from qdist.errors import (
    AlphabetUnsupported,
    EmptyDomain,
    EmptySabotageSet,
    OutOfDomain,
)


@st.composite
def binary_functions(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n))
    return PartialFunction.from_truth_table(n, bits)


class TestStrings:
    def test_parse_sabotage_symbols(self):
        assert bf.parse_string("01*†") == (0, 1, 2, 3)
        assert bf.format_string((0, 1, 2, 3), sabotage=True) == "01*†"

    def test_encode_is_msb_first(self):
        assert bf.encode((1, 0)) == 2
        assert bf.decode(2, 2) == (1, 0)
        for c in range(16):
            assert bf.encode(bf.decode(c, 4)) == c


class TestPartialFunction:
    def test_empty_domain_rejected(self):
        with pytest.raises(EmptyDomain):
            PartialFunction(2, 2, {})

    def test_bad_values_rejected(self):
        with pytest.raises(ValueError):
            PartialFunction(1, 2, {"0": 2})
        with pytest.raises(ValueError):
            PartialFunction(1, 2, {"2": 0})

    def test_equality_and_hash(self):
        assert bf.OR(2) == bf.OR(2)
        assert hash(bf.OR(2)) == hash(bf.OR(2))
        assert bf.OR(2) != bf.AND(2)

    def test_pickles(self):
        f = bf.sabotage(bf.AND(2))
        g = pickle.loads(pickle.dumps(f))
        assert g == f and g.q == 4


class TestEvaluate:
    def test_or(self):
        assert bf.evaluate(bf.OR(2), "11") == 1
        assert bf.evaluate(bf.OR(2), "00") == 0

    def test_off_promise(self):
        g = bf.compose_uind(bf.identity(), 1)
        with pytest.raises(OutOfDomain):
            bf.evaluate(g, "01000")


class TestFlip:
    def test_single(self):
        assert bf.flip("0000", {0}) == bf.parse_string("1000")

    def test_full(self):
        assert bf.flip("0110", {0, 1, 2, 3}) == bf.parse_string("1001")

    def test_larger_alphabet(self):
        with pytest.raises(AlphabetUnsupported):
            bf.flip("0120", {0}, q=4)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=6), st.data())
    def test_involution(self, x, data):
        block = data.draw(st.sets(st.integers(0, len(x) - 1), min_size=1))
        assert bf.flip(bf.flip(x, block), block) == tuple(x)


class TestSubfunction:
    def test_or_at_zero(self):
        g = bf.subfunction_fx(bf.OR(2), "00")
        assert set(g.domain) == set(itertools.product((0, 1), repeat=2))
        assert g.inputs_with_value(1) == [(0, 0)]

    def test_and_at_one(self):
        g = bf.subfunction_fx(bf.AND(2), "11")
        assert len(g) == 4
        assert g.inputs_with_value(1) == [(1, 1)]

    def test_constant(self):
        g = bf.subfunction_fx(bf.constant(3, 1), "010")
        assert g.domain == ((0, 1, 0),)


class TestCompose:
    def test_and_of_and(self):
        f = bf.compose_full(bf.AND(2), bf.AND(2))
        assert f("1111") == 1
        assert f("1110") == 0

    def test_index_k1(self):
        f = bf.compose_index(bf.identity(), 1)
        assert f.n == 3
        assert f("101") == 1

    def test_index_k2(self):
        f = bf.compose_index(bf.identity(), 2)
        assert f.n == 2 * 1 + 4 == 6
        assert f("100100") == 0  # pointer "10" selects array cell 2
        assert f("100010") == 1

    def test_uind_in_promise(self):
        f = bf.compose_uind(bf.identity(), 1)
        assert f("01100") == 1
        assert f("00100") == 0

    def test_uind_marker_missing(self):
        f = bf.compose_uind(bf.identity(), 1)
        assert bf.parse_string("01000") not in f


class TestSabotage:
    def test_and2(self):
        assert bf.sabotaged_inputs(bf.AND(2)) == [(1, 2), (2, 1), (2, 2)]
        g = bf.sabotage(bf.AND(2))
        assert (g.n, g.q, len(g)) == (2, 4, 6)
        assert g.inputs_with_value(0) == [(1, 2), (2, 1), (2, 2)]
        assert g.inputs_with_value(1) == [(1, 3), (3, 1), (3, 3)]

    def test_or2(self):
        assert sorted(bf.sabotaged_inputs(bf.OR(2))) == [(0, 2), (2, 0), (2, 2)]
        assert len(bf.sabotage(bf.OR(2))) == 6

    def test_constant(self):
        with pytest.raises(EmptySabotageSet):
            bf.sabotage(bf.constant(2, 1))


class TestRestrictNegate:
    def test_restrict_to_one(self):
        assert bf.restrict(bf.OR(2), 0, 1) == bf.constant(1, 1)

    def test_restrict_to_zero(self):
        assert bf.restrict(bf.OR(2), 0, 0) == bf.identity()

    def test_restrict_empties(self):
        with pytest.raises(EmptyDomain):
            bf.restrict(PartialFunction(2, 2, {"00": 0}), 0, 1)

    @given(binary_functions())
    @settings(max_examples=50)
    def test_negate_involution(self, f):
        assert bf.negate(bf.negate(f)) == f

    def test_restrict_assignment(self):
        a = PartialAssignment.from_dict(4, {1: 1})
        assert all(x[1] == 1 for x in bf.restrict_assignment(bf.OR(4), a))
        assert len(bf.restrict_assignment(bf.OR(4), a)) == 8


class TestBuiltins:
    def test_promise_or(self):
        f = bf.promise_or(4)
        assert len(f) == 5
        assert f("0000") == 0 and f("0010") == 1

    def test_collision_size(self):
        f = bf.collision(4)
        assert f.q == 4
        assert len(f.inputs_with_value(0)) == 24

    def test_index(self):
        f = bf.INDEX(1)
        assert f.n == 3
        assert all(f(x) == x[1 + x[0]] for x in f.domain)

    def test_maj(self):
        assert [bf.MAJ(3)(x) for x in ("110", "100")] == [1, 0]


class TestAssignment:
    def test_rejects_duplicates_and_range(self):
        with pytest.raises(ValueError):
            PartialAssignment(2, frozenset({(0, 1), (0, 0)}))
        with pytest.raises(ValueError):
            PartialAssignment.from_dict(2, {2: 0})

    def test_consistency(self):
        a = PartialAssignment.of((1, 0, 1), [0, 2])
        assert a.consistent_with((1, 1, 1))
        assert not a.consistent_with((0, 1, 1))
        assert str(a) == "1.1"
