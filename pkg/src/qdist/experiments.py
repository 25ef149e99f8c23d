"""Acceptance experiments, shared by the command line and the test suite.

Each runner returns an ``ExperimentResult``: named checks with pass/fail and
the measured quantities behind them. Runners are deterministic given their
parameters (including ``seed``).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import boolfn as bf
from .catalog import default_catalog
from .boolfn import DAGGER, PartialFunction, encode, format_string, parse_string
from .constructions import certfind, classical, quantum
from .measures import combinatorial as comb
from .measures import polynomial as poly
from .measures import spectral
from .numopt.sdp import DEFAULT_TOL, witness_value
from .qsim import library
from .qsim.algorithm import OutputSpec, QueryAlgorithm, from_builtins
from .qsim.hybrid import hybrid_check
from .qsim.states import trace_distance, trace_distance_pure
from .errors import DistinguishingPromiseViolated, UnknownExperiment

HYBRID_SLACK = 1e-9
IDEAL_ATOL = 1e-9


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class ExperimentResult:
    name: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    metrics: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, label: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(passed), detail))
        return bool(passed)


def _fmt(x) -> str:
    return format(float(x), ".12g")


# ------------------------------------------------------------------ 1. hybrid

@dataclass(frozen=True)
class HybridTriple:
    label: str
    alg: QueryAlgorithm
    x: tuple
    block: frozenset


def hybrid_suite(seed: int = 0) -> list[HybridTriple]:
    """Grover variants on UOR4 plus Haar-random 2-query algorithms on n <= 4,
    each paired with every minimal sensitive block of its input."""
    out = []
    uor = bf.promise_or(4)
    for alg in (library.grover(4), library.grover_or_exact(), library.two_thirds_or()):
        for x in uor.domain:
            for b in comb.minimal_sensitive_blocks(uor, x).blocks:
                out.append(HybridTriple(alg.name, alg, x, b))
    rng = np.random.default_rng(seed)
    targets = [bf.OR(2), bf.PARITY(2), bf.MAJ(3), bf.OR(3), bf.AND(4), bf.OR(4)]
    for k, f in enumerate(targets):
        alg = library.random_algorithm(f.n, 2, seed * 100 + k)
        x = f.domain[int(rng.integers(len(f.domain)))]
        for b in comb.minimal_sensitive_blocks(f, x).blocks:
            out.append(HybridTriple(f"{alg.name}/{f.name}", alg, x, b))
    return out


def run_hybrid(alg: str | None = None, x: str | None = None, block: str | None = None, seed: int = 0):
    """The whole suite, or one triple when ``alg``, ``x`` and ``block`` are given."""
    res = ExperimentResult("hybrid", {"alg": alg, "x": x, "block": block, "seed": seed})
    if alg is not None:
        if x is None or block is None:
            raise ValueError("a single hybrid check needs --alg, --x and --block")
        positions = frozenset(int(p) for p in block.replace(",", " ").split())
        triples = [HybridTriple(alg, library.named(alg), parse_string(x), positions)]
    else:
        triples = hybrid_suite(seed)
    worst = math.inf
    for tr in triples:
        h = hybrid_check(tr.alg, tr.x, tr.block)
        slack = h.mass - h.bound
        worst = min(worst, slack)
        blk = ",".join(map(str, sorted(tr.block)))
        res.check(
            f"{tr.label} x={format_string(tr.x)} B={{{blk}}}",
            h.mass >= h.bound - HYBRID_SLACK,
            f"mass {_fmt(h.mass)} bound {_fmt(h.bound)} refined {_fmt(h.refined_bound)} eps {_fmt(h.epsilon)}",
        )
        if len(triples) == 1:
            res.metrics.update(
                mass=h.mass, bound=h.bound, refined_bound=h.refined_bound, epsilon=h.epsilon, distance=h.distance
            )
    res.metrics["triples"] = len(triples)
    res.metrics["min_slack"] = worst
    if alg is None:
        g = hybrid_check(library.grover(4), (0, 0, 0, 0), {0})
        res.metrics.update(grover_mass=g.mass, grover_bound=g.bound, grover_refined_bound=g.refined_bound)
        res.check("at least 20 triples", len(triples) >= 20, str(len(triples)))
        res.check(
            "grover4 x=0000 B={0}: mass = refined bound = 1/4",
            abs(g.mass - 0.25) <= 1e-9 and abs(g.refined_bound - 0.25) <= 1e-9,
            f"mass {_fmt(g.mass)} refined {_fmt(g.refined_bound)} main {_fmt(g.bound)}",
        )
    return res


# ------------------------------------------------------------------ 2. trace-distance identity

def random_pure(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def run_trace_identity(count: int = 500, seed: int = 0):
    """``sqrt(1 - |<psi|phi>|^2)`` against the eigenvalue trace norm on random pure pairs."""
    res = ExperimentResult("trace-identity", {"count": count, "seed": seed})
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        dim = int(rng.integers(2, 17))
        a, b = random_pure(dim, rng), random_pure(dim, rng)
        worst = max(worst, abs(trace_distance_pure(a, b) - trace_distance(a, b)))
    res.metrics["max_abs_difference"] = worst
    res.check(f"{count} random pure pairs agree within 1e-9", worst <= 1e-9, _fmt(worst))
    return res


# ------------------------------------------------------------------ 3. collision

def run_collision(n: int = 4):
    res = ExperimentResult("collision", {"n": n})
    f = bf.collision(n)
    alg = quantum.collision_distinguisher(n)
    out = quantum.DistinguisherOutput.from_algorithm(alg, f)
    v = quantum.verify_distinguisher(out, f)
    target = math.sqrt(3) / 2 if n == 4 else None
    res.metrics.update(
        min_cross_distance=v.min_cross_distance,
        one_to_one=len(f.inputs_with_value(0)),
        two_to_one=len(f.inputs_with_value(1)),
        queries=alg.T,
    )
    res.check("one query", alg.T == 1)
    res.check("passes at threshold 1/6", v.passed, _fmt(v.min_cross_distance))
    if target is not None:
        res.check("min cross distance >= sqrt(3)/2 - 1e-9", v.min_cross_distance >= target - 1e-9)
    x = f.inputs_with_value(0)[0]
    res.check("x = y gives distance 0", trace_distance_pure(out.states[x], out.states[x]) <= 1e-12)
    return res


# ------------------------------------------------------------------ 4. measure chains

def random_total(n: int, rng: np.random.Generator) -> PartialFunction:
    bits = rng.integers(0, 2, size=1 << n)
    return PartialFunction.from_truth_table(n, [int(b) for b in bits])


def chain_violations(f: PartialFunction, tol: float = DEFAULT_TOL) -> list[str]:
    s = comb.sensitivity(f).value
    bs = comb.block_sensitivity(f).value
    fbs = comb.fractional_block_sensitivity(f).value
    c = comb.certificate_complexity(f).value
    d = comb.dtree_complexity(f).value
    deg = poly.exact_degree(f).value
    adeg = poly.approx_degree(f).value
    a = spectral.adv(f, tol).value
    g = spectral.gen_adv(f, tol).value
    bad = []
    chain = [("s", s), ("bs", bs), ("fbs", fbs), ("C", c), ("D", d), ("n", f.n)]
    for (na, va), (nb, vb) in zip(chain, chain[1:]):
        if not va <= vb:
            bad.append(f"{na}={va} > {nb}={vb}")
    if not adeg <= deg <= d:
        bad.append(f"adeg={adeg} deg={deg} D={d}")
    if not a <= g + 2 * tol:
        bad.append(f"adv={a} > gen_adv={g} + 2tol")
    return bad


def run_chain(n: int = 3, exhaustive: bool = True, count: int = 200, seed: int = 0, tol: float = DEFAULT_TOL):
    res = ExperimentResult("chain", {"n": n, "exhaustive": exhaustive, "count": count, "seed": seed, "tol": tol})
    if exhaustive:
        funcs = [PartialFunction.from_truth_table(n, [t >> c & 1 for c in range(1 << n)]) for t in range(1 << (1 << n))]
    else:
        rng = np.random.default_rng(seed)
        funcs = [random_total(n, rng) for _ in range(count)]
    failures = []
    for f in funcs:
        bad = chain_violations(f, tol)
        if bad:
            failures.append(("".join(str(f.codes[c]) for c in range(1 << n)), bad))
    res.metrics.update(functions=len(funcs), failures=len(failures))
    detail = "; ".join(f"{tt}: {', '.join(b)}" for tt, b in failures[:3])
    res.check(f"chain holds on {len(funcs)} functions of {n} bits", not failures, detail)
    return res


# ------------------------------------------------------------------ 5. adversary values

def run_adversary(tol: float = DEFAULT_TOL):
    res = ExperimentResult("adversary", {"tol": tol})
    for n in (2, 3, 4):
        f = bf.OR(n)
        r = spectral.adv(f, tol)
        inst = spectral.adversary_instance(f)
        # weight 1 on (0^n, e_i) pairs only
        gamma = np.array([[float(sum(y) == 1) for y in inst.Y] for _ in inst.X])
        closed = witness_value(gamma, inst.masks)
        res.metrics[f"adv_OR{n}"] = r.value
        res.check(f"adv(OR{n}) = sqrt({n}) within 1e-4", abs(r.value - math.sqrt(n)) <= 1e-4, _fmt(r.value))
        res.check(f"OR{n} closed-form witness gives sqrt({n})", abs(closed - math.sqrt(n)) <= 1e-12, _fmt(closed))
        res.check(f"OR{n} dual certificate <= sqrt({n}) + 1e-4", r.upper <= math.sqrt(n) + 1e-4, _fmt(r.upper))
    inner = spectral.adv(bf.AND(2), tol).value
    comp = spectral.adv(bf.compose_full(bf.AND(2), bf.AND(2)), tol).value
    res.metrics.update(adv_AND2=inner, adv_AND2oAND2=comp)
    res.check("adv(AND2∘AND2) = 2 within 1e-3", abs(comp - 2) <= 1e-3, _fmt(comp))
    res.check("adv(AND2∘AND2) = adv(AND2)^2 within 1e-3", abs(comp - inner**2) <= 1e-3)
    return res


# ------------------------------------------------------------------ 6. approximate degree of parity

def run_parity_adeg(max_n: int = 4):
    res = ExperimentResult("parity-adeg", {"max_n": max_n})
    for n in range(1, max_n + 1):
        f = bf.PARITY(n)
        below = poly.approx_feasible(f, n - 1)
        at = poly.approx_feasible(f, n)
        res.check(f"PARITY{n}: infeasible at degree {n - 1}, feasible at {n}", not below and at)
        res.check(f"adeg(PARITY{n}) = {n}", poly.approx_degree(f).value == n)
    return res


# ------------------------------------------------------------------ 7. QSZK constructions

def _rotation_family() -> list[QueryAlgorithm]:
    """``grover_or_exact`` followed by answer rotations that keep the 2/3 promise."""
    out = [library.grover_or_exact(), library.two_thirds_or()]
    for theta in (0.2, 0.4, 0.6):
        out.append(library.with_final_rotation(library.grover_or_exact(), theta, name=f"grover4-ry{theta}"))
    return out


def run_qszk_product(grid_steps: int = 12):
    res = ExperimentResult("qszk-product", {"grid_steps": grid_steps})
    uor = bf.promise_or(4)
    exact = quantum.q_to_qszk(library.grover_or_exact(), uor)
    cl = quantum.check_qszk_clauses(exact, uor, far=1, close=0)
    res.check("exact algorithm: distance 1 on 1-inputs, 0 on 0-inputs", cl.passed)
    third = quantum.q_to_qszk(library.two_thirds_or(), uor)
    cl = quantum.check_qszk_clauses(third, uor)
    res.metrics.update(two_thirds_min_on_ones=cl.min_on_ones, two_thirds_max_on_zeros=cl.max_on_zeros)
    res.check("2/3 algorithm: clauses hold with constants 2/3 and 1/3", cl.passed)
    res.check(
        "2/3 algorithm sits exactly on the constants",
        abs(cl.min_on_ones - 2 / 3) <= 1e-12 and abs(cl.max_on_zeros - 1 / 3) <= 1e-12,
    )
    const = bf.constant(4, 0)
    zero = quantum.q_to_qszk(quantum.constant_reject(4), const)
    res.check("constant-0 f, always-reject: all distances 0", all(zero.distance(x) <= 1e-12 for x in const.domain))
    worst = math.inf
    for alg in _rotation_family():
        pair = quantum.q_to_qszk(alg, uor)
        v = quantum.verify_distinguisher(quantum.qszk_to_qd(pair, uor), uor)
        tri = quantum.triangle_step(pair, uor)
        worst = min(worst, v.min_cross_distance)
        res.metrics[f"{alg.name}_min_cross"] = v.min_cross_distance
        res.check(f"{alg.name}: tensor output passes at threshold 1/6", v.passed, _fmt(v.min_cross_distance))
        res.check(f"{alg.name}: triangle step >= 1/6", tri >= 1 / 6 - quantum.ROUNDOFF, _fmt(tri))
    res.metrics["min_cross_over_suite"] = worst
    for exact_constants in (False, True):
        g = quantum.diagonal_grid_min(grid_steps, exact_constants)
        tag = "exact (2/3, 1/3)" if exact_constants else "all valid"
        res.metrics[f"grid_min_{'exact' if exact_constants else 'all'}"] = g
        res.check(f"diagonal grid, {tag} pairs: min cross distance in [1/6, 1]", Fraction(1, 6) <= g <= 1, str(g))
    return res


def complement_cases() -> list[tuple[str, QueryAlgorithm, QueryAlgorithm, PartialFunction]]:
    """Ideal-regime circuit pairs; C is the answer register, B the index register."""
    keep = OutputSpec(("answer",))
    uor = bf.promise_or(4)
    r = library.grover_or_exact().with_output(keep)
    s_plain = from_builtins(4, 2, 1, ["identity"], keep, name="reset")
    s_twisted = from_builtins(4, 2, 1, ["uniform-superposition"], keep, name="reset-twisted")
    return [("exact-vs-reset", r, s_plain, uor), ("exact-vs-twisted-reset", r, s_twisted, uor)]


def run_qszk_complement():
    res = ExperimentResult("qszk-complement", {})
    for label, r, s, f in complement_cases():
        for x in f.domain:
            d = quantum.complement_diagnostics(r, s, x)
            tag = f"{label} x={format_string(x)}"
            res.check(f"{tag}: R' and S' differ only in D", d.differ_only_in_d)
            if d.regime == "equal":
                res.check(f"{tag}: distance-0 input -> output 1/2", abs(d.distance_out - 0.5) <= IDEAL_ATOL, _fmt(d.distance_out))
                res.check(f"{tag}: swap unitary U_B maps R to S", d.witness_residual <= 1e-9, _fmt(d.witness_residual))
            elif d.regime == "orthogonal":
                res.check(f"{tag}: distance-1 input -> output 0", d.distance_out <= IDEAL_ATOL, _fmt(d.distance_out))
                res.check(f"{tag}: writing unitary maps R' to S'", d.witness_residual <= 1e-9, _fmt(d.witness_residual))
            else:
                res.check(f"{tag}: input pair is in the ideal regime", False, _fmt(d.distance_in))
        pair = quantum.qszk_complement(r, s, f)
        flipped = quantum.check_qszk_clauses(pair, bf.negate(f), far=Fraction(1, 2), close=0)
        res.check(f"{label}: complement pair separates NOT f (1/2 vs 0)", flipped.passed)
    return res


# ------------------------------------------------------------------ 8. algorithm P and the wrapper

def p_setup():
    f = bf.promise_or(4)
    alg = library.grover(4)
    s = comb.sensitivity(f).value
    fbs = comb.fractional_block_sensitivity(f).value
    return f, alg, certfind.repetitions(alg.T, s, fbs)


def run_cert_finder(seeds: int = 100, seed: int = 0, R: int | None = None):
    f, alg, default_r = p_setup()
    R = default_r if R is None else R
    res = ExperimentResult("cert-finder", {"seeds": seeds, "seed": seed, "R": R})
    v = quantum.verify_distinguisher(quantum.DistinguisherOutput.from_algorithm(alg, f), f)
    res.check("grover4 distinguishes UOR4 at threshold 1/6", v.passed, _fmt(v.min_cross_distance))
    runs = hits = wrong = uncertified = 0
    for k in range(seeds):
        for x in f.domain:
            found = certfind.certificate_finder_P(alg, f, x, R, seed + k)
            runs += 1
            hits += found.is_cert
            w = certfind.zero_error_wrapper(alg, f, x, seed + k, R)
            wrong += w.value != f(x)
            uncertified += not comb.is_certificate(f, w.certificate)
    rate = hits / runs
    res.metrics.update(runs=runs, batch1_success_rate=rate, wrong_values=wrong, uncertified=uncertified)
    res.check("wrapper value always equals f(x)", wrong == 0, str(wrong))
    res.check("wrapper assignment always certifies", uncertified == 0, str(uncertified))
    res.check(f"batch-1 success rate >= 0.9 at R = {R}", rate >= 0.9, _fmt(rate))
    return res


def run_zero_error(seeds: int = 100, seed: int = 0):
    f, alg, R = p_setup()
    res = ExperimentResult("zero-error", {"seeds": seeds, "seed": seed, "R": R})
    batches, wrong = [], 0
    for k in range(seeds):
        for x in f.domain:
            w = certfind.zero_error_wrapper(alg, f, x, seed + k, R)
            batches.append(w.batches_used)
            wrong += (w.value != f(x)) or not comb.is_certificate(f, w.certificate)
    mean = sum(batches) / len(batches)
    res.metrics.update(mean_batches=mean, max_batches=max(batches), wrong=wrong)
    res.check("never a wrong value or a non-certificate", wrong == 0)
    res.check("mean batches_used <= 2", mean <= 2, _fmt(mean))
    const = bf.constant(4, 1)
    w = certfind.zero_error_wrapper(alg, const, "0110", seed, R)
    res.check("constant f needs 0 batches", w.batches_used == 0 and w.value == 1)
    return res


# ------------------------------------------------------------------ 9. sabotage and RD <-> RS

def run_sabotage():
    res = ExperimentResult("sabotage", {})
    f = bf.AND(2)
    stars = [format_string(z, sabotage=True) for z in bf.sabotaged_inputs(f)]
    fs = bf.sabotage(f)
    res.metrics.update(S_star=stars, domain_size=len(fs))
    res.check("|Dom(f_sab(AND2))| = 6", len(fs) == 6, str(len(fs)))
    res.check("S_* = {1*, *1, **}", sorted(stars) == sorted(["1*", "*1", "**"]), " ".join(stars))
    res.check("f_sab is 0 on S_* and 1 on S_†", all(fs(z) == int(DAGGER in z) for z in fs.domain))
    return res


RDRS_FUNCTIONS = ("AND2", "OR2", "PARITY2", "AND3", "OR3", "MAJ3", "UOR4", "IND1")


def _suite_function(name: str) -> PartialFunction:
    return default_catalog().get(name)


def read_all_sab(n: int) -> classical.RandomizedAlgorithm:
    tree = classical.read_all_tree(n, 4, output=lambda z: int(DAGGER in z))
    return classical.RandomizedAlgorithm.deterministic(tree, n, 4)


def run_rdrs():
    res = ExperimentResult("rdrs", {"functions": list(RDRS_FUNCTIONS)})
    valid: list[tuple[str, classical.RandomizedAlgorithm, PartialFunction]] = []
    for name in RDRS_FUNCTIONS:
        f = _suite_function(name)
        fs = bf.sabotage(f)
        for label, a in (("read-all", read_all_sab(f.n)), ("scan", classical.uniform_scan(f.n))):
            b = classical.rs_to_rd_transform(a, f)
            tv = classical.min_cross_tv(b, f)
            c = classical.cost(a, fs.domain)
            res.check(f"{name} {label}: budget 2·cost gives min cross TV >= 1/6", tv.value >= Fraction(1, 6), f"TV {tv.value}, cost {c}")
            valid.append((f"{name} {label}", b, f))
            for budget in range(1, f.n):
                b = classical.rs_to_rd_transform(a, f, budget)
                if classical.min_cross_tv(b, f).value >= Fraction(1, 6):
                    valid.append((f"{name} {label} budget {budget}", b, f))
        det = classical.RandomizedAlgorithm.deterministic(classical.read_all_tree(f.n), f.n)
        valid.append((f"{name} read-all binary", det, f))
    and2 = bf.AND(2)
    d0 = classical.rs_to_rd_transform(read_all_sab(2), and2, 0)
    res.check("budget 0: degenerate, TV = 0", d0.degenerate and classical.min_cross_tv(d0, and2).value == 0)
    d = classical.rs_to_rd_transform(read_all_sab(2), and2)
    tv = classical.tv_distance(classical.output_distribution(d, "11"), classical.output_distribution(d, "01"))
    res.check("AND2 read-both: TV(d_11, d_01) = 1", tv == 1, str(tv))
    worst = Fraction(1)
    for label, b, f in valid:
        r = classical.rd_to_rs_transform(b, f)
        worst = min(worst, r.min_hit)
        res.check(f"{label}: hit probability >= 1/12", r.passed, str(r.min_hit))
    res.metrics.update(valid_B=len(valid), min_hit_probability=worst)
    single = classical.RandomizedAlgorithm.deterministic(classical.Node(0, (classical.Leaf(0), classical.Leaf(1))), 2)
    try:
        classical.rd_to_rs_transform(single, and2)
        rejected = False
    except DistinguishingPromiseViolated:
        rejected = True
    res.check("single-position B on AND2 rejected", rejected)
    return res


# ------------------------------------------------------------------ 10. minimal sensitive blocks

def _brute_minimal(codes: dict[int, int], cx: int, n: int) -> list[int]:
    v = codes[cx]
    sens = [m for m in range(1, 1 << n) if codes.get(cx ^ m, v) != v]
    return sorted(m for m in sens if not any(o != m and o & m == o for o in sens))


def block_violations(f: PartialFunction) -> int:
    s = comb.sensitivity(f).value
    codes, n = f.codes, f.n
    bad = 0
    for x in f.domain:
        cx = encode(x)
        blocks = comb.minimal_sensitive_blocks(f, x).blocks
        masks = sorted(comb.block_to_mask(b, n) for b in blocks)
        cert = comb.find_certificate(f, x).positions
        if masks != _brute_minimal(codes, cx, n):
            bad += 1
        bad += sum(len(b) > s for b in blocks)
        bad += sum(not (b & cert) for b in blocks)
    return bad


def run_blocks(max_n: int = 4):
    """All total functions on ``n <= max_n`` bits.

    ``f`` and ``NOT f`` have the same sensitive blocks and certificates, so
    only truth tables with ``f(0...0) = 0`` are checked; each skipped table is
    the complement of a checked one.
    """
    res = ExperimentResult("blocks", {"max_n": max_n})
    for n in range(1, max_n + 1):
        size = 1 << n
        checked = bad = 0
        for t in range(0, 1 << size, 2):
            f = PartialFunction.from_truth_table(n, [t >> c & 1 for c in range(size)])
            bad += block_violations(f)
            checked += 1
        res.metrics[f"n{n}_functions"] = 2 * checked
        res.check(f"n = {n}: {2 * checked} functions, blocks match brute force, size <= s, hit by certificates", bad == 0, str(bad))
    return res


EXPERIMENTS: dict[str, Callable[..., ExperimentResult]] = {
    "hybrid": run_hybrid,
    "trace-identity": run_trace_identity,
    "collision": run_collision,
    "chain": run_chain,
    "adversary": run_adversary,
    "parity-adeg": run_parity_adeg,
    "qszk-product": run_qszk_product,
    "qszk-complement": run_qszk_complement,
    "cert-finder": run_cert_finder,
    "zero-error": run_zero_error,
    "sabotage": run_sabotage,
    "rdrs": run_rdrs,
    "blocks": run_blocks,
}

# experiments whose outcome depends on a seed; their results never enter a cache
RANDOMIZED = frozenset({"hybrid", "trace-identity", "chain", "cert-finder", "zero-error"})


def run_experiment(name: str, **params) -> ExperimentResult:
    try:
        runner = EXPERIMENTS[name]
    except KeyError:
        raise UnknownExperiment(f"{name!r}; known: {', '.join(sorted(EXPERIMENTS))}") from None
    start = time.perf_counter()
    res = runner(**params)
    res.elapsed = time.perf_counter() - start
    return res
