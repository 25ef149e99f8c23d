"""Command-line driver: ``qdist measures | verify | compose | catalog``.

Reports are JSON documents with sorted keys. Exact rationals appear as
``"p/q"`` strings and reals as 17-significant-digit strings, so two runs of
the same command produce the same ``body`` byte for byte. Wall-clock time
and cache-hit flags live under ``meta``.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from .boolfn import PartialAssignment, PartialFunction
from .catalog import DEFAULT_CAP, Catalog, content_hash, default_catalog
from .errors import QdistError, UnknownMeasure
from .experiments import EXPERIMENTS, ExperimentResult, run_experiment
from .measures import (
    adv,
    approx_degree,
    block_sensitivity,
    certificate_complexity,
    dtree_complexity,
    exact_degree,
    fractional_block_sensitivity,
    gen_adv,
    qd_bounds,
    sensitivity,
)
from .numopt.sdp import DEFAULT_TOL
from .report import MeasureReport

REPORT_FORMAT = "qdist-report/1"
CACHE_FORMAT = "qdist-cache/1"
ENV_CACHE = "QDIST_CACHE"
ENV_WORKERS = "QDIST_WORKERS"
ENV_CATALOG = "QDIST_CATALOG"

# measures whose value depends on the SDP tolerance
_TOL_MEASURES = {"adv", "gen_adv", "qd"}

MEASURES: dict[str, Callable[[PartialFunction, float], list[MeasureReport]]] = {
    "D": lambda f, tol: [dtree_complexity(f)],
    "C": lambda f, tol: [certificate_complexity(f)],
    "s": lambda f, tol: [sensitivity(f)],
    "bs": lambda f, tol: [block_sensitivity(f)],
    "fbs": lambda f, tol: [fractional_block_sensitivity(f)],
    "deg": lambda f, tol: [exact_degree(f)],
    "adeg": lambda f, tol: [approx_degree(f)],
    "adv": lambda f, tol: [adv(f, tol)],
    "gen_adv": lambda f, tol: [gen_adv(f, tol)],
    "qd": lambda f, tol: list(qd_bounds(f, tol)),
}


# ------------------------------------------------------------------ serialization

def jsonable(v):
    """Stable JSON form: Fractions as ``"p/q"``, floats as 17-digit strings."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [jsonable(x) for x in v]
        return sorted(items, key=str) if isinstance(v, (set, frozenset)) else items
    if isinstance(v, PartialAssignment):
        return str(v)
    if hasattr(v, "value"):  # enums
        return jsonable(v.value)
    return str(v)


def measure_record(r: MeasureReport) -> dict:
    return {
        "name": r.name,
        "value": jsonable(r.value),
        "lower": jsonable(r.lower),
        "upper": jsonable(r.upper),
        "tolerance": jsonable(r.tolerance),
        "provenance": r.provenance.value,
        "note": r.note,
        "details": jsonable(r.details),
        "passed": True,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------ cache

class MeasureCache:
    """JSON file of serialized measure records keyed by function hash, measure and parameters."""

    def __init__(self, path: Path | None):
        self.path = path
        self.entries: dict[str, list[dict]] = {}
        self.dirty = False
        if path is not None and path.exists():
            try:
                doc = json.loads(path.read_text())
            except json.JSONDecodeError:
                doc = {}
            if doc.get("format") == CACHE_FORMAT:
                self.entries = doc.get("entries", {})

    @staticmethod
    def key(fhash: str, measure: str, tol: float) -> str:
        params = f"tol={format(tol, '.17g')}" if measure in _TOL_MEASURES else "-"
        return f"{fhash}|{measure}|{params}"

    def get(self, key: str) -> list[dict] | None:
        return self.entries.get(key)

    def put(self, key: str, records: list[dict]) -> None:
        self.entries[key] = records
        self.dirty = True

    def save(self) -> None:
        if self.path is None or not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(dumps({"format": CACHE_FORMAT, "entries": self.entries}))
        tmp.replace(self.path)


def _compute(job: tuple[PartialFunction, str, float]) -> list[dict]:
    f, measure, tol = job
    try:
        return [measure_record(r) for r in MEASURES[measure](f, tol)]
    except QdistError as exc:
        return [{"name": measure, "error": f"{type(exc).__name__}: {exc}", "passed": False}]


# ------------------------------------------------------------------ catalogs

def load_catalog(path: str | None, cap: int) -> tuple[Catalog, list[str]]:
    """Built-in entries plus the lines of ``path`` (if it exists)."""
    cat = default_catalog(cap)
    lines: list[str] = []
    if path and Path(path).exists():
        for line in Path(path).read_text().splitlines():
            if cat.add_line(line) is not None:
                lines.append(line.strip())
    return cat, lines


def save_catalog_lines(path: str, lines: list[str]) -> None:
    Path(path).write_text("".join(line + "\n" for line in lines))


# ------------------------------------------------------------------ commands

def cmd_measures(args) -> tuple[dict, bool]:
    cat, _ = load_catalog(args.catalog, args.cap)
    measures = [m.strip() for m in args.measure.split(",") if m.strip()]
    unknown = [m for m in measures if m not in MEASURES]
    if unknown:
        raise UnknownMeasure(f"{', '.join(unknown)}; valid measures: {', '.join(MEASURES)}")
    names = cat.names() if args.fn == "all" else [n.strip() for n in args.fn.split(",")]
    funcs = [(name, cat.get(name)) for name in names]
    cache = MeasureCache(None if args.no_cache else Path(args.cache) if args.cache else None)

    jobs, keys, hits = [], [], []
    for name, f in funcs:
        h = content_hash(f)
        for m in measures:
            key = MeasureCache.key(h, m, args.tol)
            keys.append((name, m, key))
            if cache.get(key) is None:
                jobs.append((key, (f, m, args.tol)))
            else:
                hits.append(f"{name}:{m}")
    workers = max(1, args.workers)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            computed = list(pool.map(_compute, [j for _, j in jobs]))
    else:
        computed = [_compute(j) for _, j in jobs]
    fresh = dict(zip((k for k, _ in jobs), computed))
    for key, records in fresh.items():
        if all(r.get("passed") for r in records):
            cache.put(key, records)
    cache.save()

    results = []
    for name, m, key in keys:
        for rec in fresh.get(key) or cache.get(key):
            results.append({"function": name, "measure": m, **rec})
    body = {
        "command": "measures",
        "functions": [
            {"name": name, "hash": content_hash(f), "n": f.n, "q": f.q, "domain_size": len(f)} for name, f in funcs
        ],
        "parameters": {"measures": measures, "tol": jsonable(args.tol)},
        "results": results,
    }
    passed = all(r["passed"] for r in results)
    return {"body": body, "meta": {"cache_hits": hits}}, passed


_VERIFY_FLAGS = ("seed", "alg", "x", "block", "n", "exhaustive", "count", "seeds", "R", "tol", "max_n", "grid_steps")


def cmd_verify(args) -> tuple[dict, bool]:
    runner = EXPERIMENTS.get(args.experiment)
    params = {k: getattr(args, k) for k in _VERIFY_FLAGS if getattr(args, k) is not None}
    if runner is not None:
        accepted = set(inspect.signature(runner).parameters)
        extra = sorted(set(params) - accepted - {"seed"})
        if extra:
            raise ValueError(f"experiment {args.experiment!r} does not take {', '.join('--' + e for e in extra)}")
        if "seed" not in accepted:
            params.pop("seed", None)
    res: ExperimentResult = run_experiment(args.experiment, **params)
    body = {
        "command": "verify",
        "experiment": res.name,
        "parameters": jsonable(res.params),
        "results": [{"check": c.label, "passed": c.passed, "detail": c.detail} for c in res.checks],
        "metrics": jsonable(res.metrics),
        "passed": res.passed,
    }
    return {"body": body, "meta": {"experiment_seconds": format(res.elapsed, ".3f")}}, res.passed


def cmd_compose(args) -> tuple[dict, bool]:
    cat, lines = load_catalog(args.catalog, args.cap)
    entry = cat.compose(" ".join(args.spec))
    if args.catalog:
        save_catalog_lines(args.catalog, lines + [entry.line()])
    f = entry.function
    body = {
        "command": "compose",
        "entry": entry.line(),
        "function": {"name": entry.name, "hash": content_hash(f), "n": f.n, "q": f.q, "domain_size": len(f)},
        "results": [{"check": "constructed within cap", "passed": True}],
    }
    return {"body": body, "meta": {}}, True


def cmd_catalog(args) -> tuple[dict, bool]:
    cat, lines = load_catalog(args.catalog, args.cap)
    if args.action == "add":
        if not args.catalog:
            raise ValueError("catalog add needs --catalog PATH")
        entry = cat.add_line(" ".join(args.line))
        if entry is None:
            raise ValueError("nothing to add")
        save_catalog_lines(args.catalog, lines + [entry.line()])
    entries = [
        {"name": e.name, "n": e.function.n, "q": e.function.q, "domain_size": len(e.function),
         "hash": content_hash(e.function), "source": e.source}
        for e in cat
    ]
    return {"body": {"command": f"catalog {args.action}", "entries": entries, "results": []}, "meta": {}}, True


# ------------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdist", description="Query-complexity workbench.")
    p.add_argument("--version", action="version", version=f"qdist {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", default=os.environ.get(ENV_CATALOG), help="catalog file (added to the built-ins)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest domain a constructor may enumerate")
    common.add_argument("--out", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measures", parents=[common], help="compute measures of catalog functions")
    m.add_argument("--fn", required=True, help="function name(s), comma separated, or 'all'")
    m.add_argument("--measure", default="D,C,s,bs,fbs,deg,adeg,adv", help=f"comma list from {','.join(MEASURES)}")
    m.add_argument("--tol", type=float, default=DEFAULT_TOL)
    m.add_argument("--cache", default=os.environ.get(ENV_CACHE))
    m.add_argument("--no-cache", action="store_true")
    m.add_argument("--workers", type=int, default=int(os.environ.get(ENV_WORKERS, "1")))
    m.set_defaults(run=cmd_measures)

    v = sub.add_parser("verify", parents=[common], help="run an acceptance experiment")
    v.add_argument("experiment", help=", ".join(EXPERIMENTS))
    v.add_argument("--seed", type=int)
    v.add_argument("--alg")
    v.add_argument("--x")
    v.add_argument("--block", help="0-based positions, comma separated")
    v.add_argument("--n", type=int)
    v.add_argument("--exhaustive", action="store_true", default=None)
    v.add_argument("--count", type=int)
    v.add_argument("--seeds", type=int)
    v.add_argument("--R", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--max-n", dest="max_n", type=int)
    v.add_argument("--grid-steps", dest="grid_steps", type=int)
    v.set_defaults(run=cmd_verify)

    c = sub.add_parser("compose", parents=[common], help="build IND k f | UIND k f | SAB f | COMP f g")
    c.add_argument("spec", nargs="+")
    c.set_defaults(run=cmd_compose)

    k = sub.add_parser("catalog", parents=[common], help="list or extend a catalog")
    k.add_argument("action", choices=("list", "add"))
    k.add_argument("line", nargs="*", help="for add: '<name> <n> <q> builtin|table ...'")
    k.set_defaults(run=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # entry text for `catalog add` may follow the options
        if args.command != "catalog":
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.line = list(args.line) + extra
    start = time.perf_counter()
    try:
        doc, passed = args.run(args)
    except (QdistError, ValueError) as exc:
        print(f"qdist: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    doc["format"] = REPORT_FORMAT
    doc["body"]["argv"] = argv
    doc["body"]["passed"] = passed
    doc["meta"]["wall_clock_seconds"] = format(time.perf_counter() - start, ".3f")
    text = dumps(doc)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
