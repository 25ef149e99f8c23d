"""Distinguishers, QSZK pairs, certificate finding and the sabotage reductions."""

import math
from fractions import Fraction

import numpy as np
import pytest

from qdist import boolfn as bf
from qdist.boolfn import PartialAssignment
from qdist.constructions import certfind, classical, quantum
from qdist.constructions.classical import Leaf, Node, RandomizedAlgorithm
from qdist.errors import (
    BadArity,
    BudgetExhausted,
    DistinguishingPromiseViolated,
    IncompleteCoverage,
    NotBoundedError,
    NotZeroError,
    OutOfDomain,
    QszkPromiseViolated,
    RegisterSpecInvalid,
)
from qdist.experiments import complement_cases, read_all_sab
from qdist.measures import is_certificate
from qdist.qsim import OutputSpec, from_builtins, run
from qdist.qsim.library import grover, grover_or_exact, two_thirds_or

UOR4 = bf.promise_or(4)


# ------------------------------------------------------------------ distinguishers

class TestCollision:
    def test_state_shape(self):
        alg = quantum.collision_distinguisher(4)
        assert alg.T == 1 and alg.q == 4
        psi = run(alg, (0, 1, 2, 3))
        expected = np.zeros(16)
        for i in range(4):
            expected[i * 4 + i] = 0.5
        assert np.allclose(psi, expected)

    def test_exhaustive_n4(self):
        f = bf.collision(4)
        v = quantum.verify_distinguisher(quantum.DistinguisherOutput.from_algorithm(quantum.collision_distinguisher(4), f), f)
        assert v.passed
        assert abs(v.min_cross_distance - math.sqrt(3) / 2) <= 1e-9

    def test_same_input(self):
        alg = quantum.collision_distinguisher(4)
        x = (0, 0, 1, 1)
        assert quantum.distance(run(alg, x), run(alg, x)) == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_bad_arity(self, n):
        with pytest.raises(BadArity):
            quantum.collision_distinguisher(n)


class TestVerify:
    def test_constant_map_fails(self):
        rho = np.eye(2) / 2
        d = quantum.DistinguisherOutput({x: rho for x in bf.OR(2).domain}, 0)
        v = quantum.verify_distinguisher(d, bf.OR(2))
        assert v.min_cross_distance == pytest.approx(0) and not v.passed

    def test_missing_input(self):
        d = quantum.DistinguisherOutput({(0, 0): np.eye(2) / 2}, 0)
        with pytest.raises(IncompleteCoverage):
            quantum.verify_distinguisher(d, bf.OR(2))

    def test_constant_function_passes(self):
        f = bf.constant(2, 0)
        d = quantum.DistinguisherOutput({x: np.eye(2) / 2 for x in f.domain}, 0)
        assert quantum.verify_distinguisher(d, f).passed


class TestQToQD:
    def test_exact_algorithm(self):
        d = quantum.q_to_qd(grover_or_exact(), UOR4)
        v = quantum.verify_distinguisher(d, UOR4, Fraction(1, 3))
        assert v.passed and v.min_cross_distance == pytest.approx(1)

    def test_two_thirds_at_one_third(self):
        d = quantum.q_to_qd(two_thirds_or(), UOR4)
        v = quantum.verify_distinguisher(d, UOR4, Fraction(1, 3))
        assert v.passed
        assert v.min_cross_distance == pytest.approx(1 / 3)

    def test_coin_flip_rejected(self):
        coin = from_builtins(4, 2, 1, ["answer-hadamard"], OutputSpec.bit())
        with pytest.raises(NotBoundedError):
            quantum.q_to_qd(coin, UOR4)


class TestQszk:
    def test_exact_pair(self):
        pair = quantum.q_to_qszk(grover_or_exact(), UOR4)
        for x, v in UOR4.table.items():
            assert pair.distance(x) == pytest.approx(v, abs=1e-12)
        assert quantum.check_qszk_clauses(pair, UOR4).passed

    def test_two_thirds_constants(self):
        pair = quantum.q_to_qszk(two_thirds_or(), UOR4)
        c = quantum.check_qszk_clauses(pair, UOR4)
        assert c.passed
        assert c.min_on_ones == pytest.approx(2 / 3) and c.max_on_zeros == pytest.approx(1 / 3)

    def test_always_reject(self):
        f = bf.constant(2, 0)
        pair = quantum.q_to_qszk(quantum.constant_reject(2), f)
        assert all(pair.distance(x) == 0 for x in f.domain)

    @pytest.mark.parametrize("alg", [grover_or_exact, two_thirds_or])
    def test_product_distinguisher(self, alg):
        pair = quantum.q_to_qszk(alg(), UOR4)
        d = quantum.qszk_to_qd(pair, UOR4)
        assert quantum.verify_distinguisher(d, UOR4, Fraction(1, 6)).passed
        assert quantum.triangle_step(pair, UOR4) >= 1 / 6

    def test_exact_product_distance(self):
        d = quantum.qszk_to_qd(quantum.q_to_qszk(grover_or_exact(), UOR4), UOR4)
        assert quantum.verify_distinguisher(d, UOR4).min_cross_distance == pytest.approx(1)

    def test_invalid_pair(self):
        half = np.eye(2) / 2
        pair = quantum.QszkPair({x: (half, half) for x in UOR4.domain}, 0)
        with pytest.raises(QszkPromiseViolated):
            quantum.qszk_to_qd(pair, UOR4)

    @pytest.mark.parametrize("exact", [False, True])
    def test_diagonal_grid(self, exact):
        g = quantum.diagonal_grid_min(12, exact)
        assert isinstance(g, Fraction)
        assert Fraction(1, 6) <= g <= 1


class TestComplement:
    @pytest.mark.parametrize("case", complement_cases(), ids=lambda c: c[0])
    def test_ideal_cases(self, case):
        _, r, s, f = case
        for x in f.domain:
            d = quantum.complement_diagnostics(r, s, x)
            assert d.differ_only_in_d
            assert d.witness_residual <= 1e-9
            if f(x) == 0:
                assert d.regime == "equal"
                assert abs(d.distance_out - 0.5) <= 1e-9
            else:
                assert d.regime == "orthogonal"
                assert d.distance_out <= 1e-9

    def test_pair(self):
        _, r, s, f = complement_cases()[0]
        pair = quantum.qszk_complement(r, s, f)
        for x, v in f.table.items():
            assert pair.distance(x) == pytest.approx(0.5 if v == 0 else 0, abs=1e-9)

    def test_dephased_output_rejected(self):
        _, r, s, f = complement_cases()[0]
        with pytest.raises(RegisterSpecInvalid):
            quantum.qszk_complement(r.with_output(OutputSpec.bit()), s, f)

    def test_pure_output_rejected(self):
        _, r, s, f = complement_cases()[0]
        with pytest.raises(RegisterSpecInvalid):
            quantum.qszk_complement(r.with_output(OutputSpec()), s, f)


# ------------------------------------------------------------------ algorithm P

class TestCertificateFinder:
    def test_success_rate(self):
        f = UOR4
        R = 64  # 64 * T^2 with T = 1
        for x in (s for s in f.domain if f(s) == 1):
            hits = sum(certfind.certificate_finder_P(grover(4), f, x, R, seed).is_cert for seed in range(100))
            assert hits >= 90

    def test_zero_repetitions(self):
        r = certfind.certificate_finder_P(grover(4), UOR4, "0100", 0, 1)
        assert len(r.assignment) == 0 and not r.is_cert

    def test_constant(self):
        f = bf.constant(4, 1)
        r = certfind.certificate_finder_P(grover(4), f, "0100", 0, 1)
        assert r.is_cert

    def test_records_queried_letters(self):
        r = certfind.certificate_finder_P(grover(4), UOR4, "0010", 50, 3)
        assert r.assignment.consistent_with((0, 0, 1, 0))

    def test_deterministic(self):
        a = certfind.certificate_finder_P(grover(4), UOR4, "0000", 20, 11)
        b = certfind.certificate_finder_P(grover(4), UOR4, "0000", 20, 11)
        assert a == b

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            certfind.certificate_finder_P(grover(4), UOR4, "0110", 5, 0)

    def test_repetitions_formula(self):
        assert certfind.repetitions(1, 4, 4) == 64 * 4 * 3
        assert certfind.repetitions(2, 1, 0) == 64 * 4 * 1


class TestZeroError:
    def test_sound_and_fast(self):
        R = certfind.repetitions(1, 4, 4)
        batches = []
        for x in UOR4.domain:
            for seed in range(20):
                w = certfind.zero_error_wrapper(grover(4), UOR4, x, seed, R)
                assert w.value == UOR4(x)
                assert is_certificate(UOR4, w.certificate)
                batches.append(w.batches_used)
        assert np.mean(batches) <= 2

    def test_constant(self):
        w = certfind.zero_error_wrapper(grover(4), bf.constant(4, 0), "1010", 0, 10)
        assert w.batches_used == 0 and w.value == 0

    def test_budget_exhausted(self):
        with pytest.raises(BudgetExhausted):
            certfind.zero_error_wrapper(grover(4), UOR4, "0000", 0, 1, max_batches=2)


# ------------------------------------------------------------------ classical path

AND2 = bf.AND(2)


class TestTrees:
    def test_depth_zero(self):
        out, read = classical.run_tree(Leaf(1), "10")
        assert out == 1 and len(read) == 0

    def test_read_all(self):
        out, read = classical.run_tree(classical.read_all_tree(2, output=AND2), "11")
        assert out == 1
        assert read.as_dict() == {0: 1, 1: 1}

    def test_text_round_trip(self):
        tree = classical.read_all_tree(2, output=AND2)
        assert classical.tree_from_text(classical.tree_to_text(tree)) == tree

    def test_mixture(self):
        a = RandomizedAlgorithm.uniform([Leaf(0), Node(0, (Leaf(0), Leaf(1)))], 2)
        assert classical.output_distribution(a, "10") == {0: Fraction(1, 2), 1: Fraction(1, 2)}
        assert classical.output_distribution(a, "00") == {0: Fraction(1)}
        assert classical.expected_queries(a, "10") == Fraction(1, 2)

    def test_sampling_matches_mixture(self):
        a = RandomizedAlgorithm.uniform([Leaf(0), Node(0, (Leaf(0), Leaf(1)))], 2)
        ones = sum(classical.run_randomized(a, "10", s)[0] for s in range(2000))
        assert abs(ones - 1000) <= 3 * math.sqrt(500)

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError):
            RandomizedAlgorithm(2, 2, ((Fraction(1, 3), Leaf(0)),))

    def test_truncation(self):
        t = classical.truncate_and_relabel(classical.read_all_tree(3), 1, 3)
        assert t.depth == 1
        out, _ = classical.run_tree(t, "101")
        assert out == PartialAssignment.from_dict(3, {0: 1})


class TestRsToRd:
    def test_and2_read_all(self):
        b = classical.rs_to_rd_transform(read_all_sab(2), AND2)
        dx = classical.output_distribution(b, "11")
        dy = classical.output_distribution(b, "01")
        assert classical.tv_distance(dx, dy) == 1
        assert classical.min_cross_tv(b, AND2).value >= Fraction(1, 6)

    def test_zero_budget(self):
        b = classical.rs_to_rd_transform(read_all_sab(2), AND2, budget=0)
        assert b.degenerate
        assert classical.min_cross_tv(b, AND2).value == 0

    @pytest.mark.parametrize("f", [bf.OR(2), bf.PARITY(2), bf.MAJ(3), bf.promise_or(4)], ids=str)
    def test_random_scan(self, f):
        a = classical.uniform_scan(f.n)
        b = classical.rs_to_rd_transform(a, f)
        assert classical.min_cross_tv(b, f).value >= Fraction(1, 6)

    def test_wrong_algorithm(self):
        liar = RandomizedAlgorithm.deterministic(Leaf(0), 2, 4)
        with pytest.raises(NotZeroError):
            classical.rs_to_rd_transform(liar, AND2)


class TestRdToRs:
    def test_and2_read_both(self):
        b = RandomizedAlgorithm.deterministic(classical.read_all_tree(2), 2)
        r = classical.rd_to_rs_transform(b, AND2)
        assert set(r.hit_probability.values()) == {1}
        assert r.passed and r.expected_queries == 24

    def test_single_position_rejected(self):
        b = RandomizedAlgorithm.deterministic(Node(0, (Leaf("0"), Leaf("1"))), 2)
        with pytest.raises(DistinguishingPromiseViolated):
            classical.rd_to_rs_transform(b, AND2)

    def test_exact_rationals(self):
        trees = [classical.read_all_tree(2), Node(1, (Leaf("a"), Node(0, (Leaf("b"), Leaf("c")))))]
        b = RandomizedAlgorithm.uniform(trees, 2)
        r = classical.rd_to_rs_transform(b, AND2)
        assert all(isinstance(p, Fraction) for p in r.hit_probability.values())
        assert r.min_hit >= Fraction(1, 12)
