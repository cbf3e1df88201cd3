"""Benchmark harness: run every pipeline on a set of instances and tabulate.

Reports are byte-stable. The CSV table and the JSON aggregate document never
contain wall-clock values, which live in a separate timings table.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .algorithms import ALGORITHMS, theoretical_factor
from .core import IntensityMatrix, as_matrix, lower_bound, verify
from .exact import DEFAULT_MAX_CELLS, DEFAULT_MAX_H, exact_opt
from .formats import FormatError, load_matrix

THREADS_ENV = "SEGMIN_THREADS"
REPORT_VERSION = 1
CSV_NAME = "report.csv"
JSON_NAME = "report.json"
TIMINGS_NAME = "timings.csv"
SUMMARY_NAME = "summary.txt"


@dataclass(frozen=True)
class ExactLimits:
    """When and how hard to run the exact solver.

    A node budget rather than a time budget keeps results independent of
    machine speed.
    """

    max_cells: int = DEFAULT_MAX_CELLS
    max_h: int = DEFAULT_MAX_H
    node_budget: int | None = 200_000

    def admits(self, T: IntensityMatrix) -> bool:
        return T.m * T.n <= self.max_cells and T.h <= self.max_h


@dataclass
class InstanceResult:
    id: str
    m: int
    n: int
    h: int
    D: int
    lower_bound: int
    sizes: dict[str, int]
    opt: int | None = None
    # "opt", "lower_bound" (not attempted) or "budget" (exact search gave up)
    exact_status: str = "lower_bound"
    runtimes: dict[str, float] = field(default_factory=dict)

    @property
    def reference(self) -> int:
        return self.opt if self.opt is not None else self.lower_bound

    @property
    def reference_kind(self) -> str:
        return "opt" if self.opt is not None else "lower_bound"

    @property
    def best(self) -> int:
        return min(self.sizes.values())

    def winners(self) -> list[str]:
        b = self.best
        return [a for a, s in self.sizes.items() if s == b]

    def to_dict(self) -> dict:
        d = asdict(self)
        del d["runtimes"]
        return d


def _ratio(a: int, b: int) -> float:
    if b == 0:
        return 1.0 if a == 0 else float("inf")
    return a / b


def _stats(xs: Sequence[float]) -> dict:
    if not xs:
        return {"count": 0, "avg": None, "median": None, "min": None, "max": None}
    return {
        "count": len(xs),
        "avg": statistics.fmean(xs),
        "median": statistics.median(xs),
        "min": min(xs),
        "max": max(xs),
    }


@dataclass
class BenchReport:
    algorithms: list[str]
    instances: list[InstanceResult] = field(default_factory=list)
    diagnostics: list[dict] = field(default_factory=list)
    alpha: Fraction = Fraction(2)

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def win_counts(self) -> dict[str, int]:
        """Instances where each algorithm is smallest, ties credited to everyone tied."""
        wins = {a: 0 for a in self.algorithms}
        for r in self.instances:
            for a in r.winners():
                wins[a] += 1
        return wins

    def pairwise(self) -> dict[str, dict]:
        """Size ratio stats for every ordered pair, keyed ``"a/b"``."""
        out = {}
        for a, b in itertools.permutations(self.algorithms, 2):
            rs = [_ratio(r.sizes[a], r.sizes[b]) for r in self.instances]
            st = _stats(rs)
            st["better"] = sum(r.sizes[a] < r.sizes[b] for r in self.instances)
            st["worse"] = sum(r.sizes[a] > r.sizes[b] for r in self.instances)
            st["tie"] = sum(r.sizes[a] == r.sizes[b] for r in self.instances)
            out[f"{a}/{b}"] = st
        return out

    def factors(self) -> dict[str, dict]:
        """Achieved size over reference next to the theoretical factor, per algorithm."""
        out = {}
        for a in self.algorithms:
            achieved = _stats([_ratio(r.sizes[a], r.reference) for r in self.instances])
            theory = _stats([float(theoretical_factor(a, r.h, r.D, self.alpha)) for r in self.instances])
            out[a] = {"achieved": achieved, "theoretical": theory}
        return out

    def best_of_all(self) -> dict:
        st = _stats([_ratio(r.best, r.reference) for r in self.instances])
        st["matches_reference"] = sum(r.best == r.reference for r in self.instances)
        return st

    def reference_counts(self) -> dict[str, int]:
        return {
            "opt": sum(r.opt is not None for r in self.instances),
            "lower_bound": sum(r.opt is None for r in self.instances),
        }

    def aggregates(self) -> dict:
        return {
            "instances": len(self.instances),
            "reference": self.reference_counts(),
            "wins": self.win_counts(),
            "pairwise": self.pairwise(),
            "factors": self.factors(),
            "best_of_all": self.best_of_all(),
        }

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "algorithms": list(self.algorithms),
            "alpha": str(self.alpha),
            "instances": [r.to_dict() for r in self.instances],
            "diagnostics": list(self.diagnostics),
            "aggregates": self.aggregates(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BenchReport":
        if d.get("version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {d.get('version')!r}")
        rep = cls(
            algorithms=list(d["algorithms"]),
            instances=[InstanceResult(**r) for r in d["instances"]],
            diagnostics=list(d["diagnostics"]),
            alpha=Fraction(d["alpha"]),
        )
        if d.get("aggregates") is not None and rep.aggregates() != d["aggregates"]:
            raise ValueError("stored aggregates disagree with the instance rows")
        return rep

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "BenchReport":
        return cls.from_dict(json.loads(text))

    def csv_header(self) -> list[str]:
        return ["id", "m", "n", "h", "D", "lower_bound", "opt", "reference"] + [
            f"size_{a}" for a in self.algorithms
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.csv_header())
        for r in self.instances:
            opt = "" if r.opt is None else r.opt
            w.writerow([r.id, r.m, r.n, r.h, r.D, r.lower_bound, opt, r.reference_kind] + [
                r.sizes[a] for a in self.algorithms
            ])
        return buf.getvalue()

    def timings_csv(self) -> str:
        names = list(self.algorithms) + ["exact"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id"] + [f"seconds_{a}" for a in names])
        for r in self.instances:
            w.writerow([r.id] + [
                f"{r.runtimes[a]:.3f}" if a in r.runtimes else "" for a in names
            ])
        return buf.getvalue()

    def write(self, directory: str | os.PathLike) -> Path:
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        (out / CSV_NAME).write_text(self.to_csv())
        (out / JSON_NAME).write_text(self.to_json())
        (out / TIMINGS_NAME).write_text(self.timings_csv())
        (out / SUMMARY_NAME).write_text(summarize(self))
        return out


def _pct(k: int, total: int) -> str:
    return f"{100 * k / total:.1f}%" if total else "-"


def _fmt(x, digits: int) -> str:
    return "-" if x is None else f"{x:.{digits}f}"


def summarize(report: BenchReport) -> str:
    """Plain-text tables for every aggregate. Ratios at 4 decimals, factors at 2."""
    n = len(report.instances)
    ref = report.reference_counts()
    lines = [
        f"instances: {n} (reference: {ref['opt']} optimum, {ref['lower_bound']} lower bound)",
    ]
    if report.diagnostics:
        lines.append(f"skipped: {len(report.diagnostics)}")
        lines += [f"  {d['path']}: {d['error']}" for d in report.diagnostics]
    lines += ["", "wins (ties credited to all)"]
    for a, k in report.win_counts().items():
        lines.append(f"  {a:<8} {k:>5} ({_pct(k, n)})")

    lines += ["", "pairwise size ratios", f"  {'pair':<12} {'avg':>8} {'median':>8} {'min':>8} {'max':>8} {'better':>7} {'worse':>7} {'tie':>7}"]
    for pair, st in report.pairwise().items():
        lines.append(
            f"  {pair:<12} {_fmt(st['avg'], 4):>8} {_fmt(st['median'], 4):>8} {_fmt(st['min'], 4):>8} "
            f"{_fmt(st['max'], 4):>8} {st['better']:>7} {st['worse']:>7} {st['tie']:>7}"
        )

    lines += ["", "approximation factors (size / reference)", f"  {'alg':<8} {'avg':>6} {'max':>6} {'theory avg':>11} {'theory max':>11}"]
    for a, st in report.factors().items():
        ach, th = st["achieved"], st["theoretical"]
        lines.append(
            f"  {a:<8} {_fmt(ach['avg'], 2):>6} {_fmt(ach['max'], 2):>6} {_fmt(th['avg'], 2):>11} {_fmt(th['max'], 2):>11}"
        )

    b = report.best_of_all()
    lines += [
        "",
        "best of all algorithms vs reference",
        f"  avg {_fmt(b['avg'], 4)}  median {_fmt(b['median'], 4)}  min {_fmt(b['min'], 4)}  max {_fmt(b['max'], 4)}",
        f"  matches reference: {b['matches_reference']} ({_pct(b['matches_reference'], n)})",
    ]
    return "\n".join(lines) + "\n"


def _evaluate(job: tuple[str, IntensityMatrix, tuple[str, ...], ExactLimits | None]) -> InstanceResult:
    name, T, algorithms, limits = job
    sizes, runtimes = {}, {}
    for a in algorithms:
        t0 = time.perf_counter()
        seg = ALGORITHMS[a](T)
        runtimes[a] = time.perf_counter() - t0
        if not verify(T, seg):
            raise AssertionError(f"{a} produced an invalid segmentation on {name}")
        sizes[a] = len(seg)
    res = InstanceResult(name, T.m, T.n, T.h, T.D, lower_bound(T), sizes, runtimes=runtimes)
    if limits is not None and limits.admits(T):
        t0 = time.perf_counter()
        ex = exact_opt(T, max_cells=limits.max_cells, max_h=limits.max_h, node_budget=limits.node_budget)
        runtimes["exact"] = time.perf_counter() - t0
        if ex.optimal:
            res.opt, res.exact_status = ex.size, "opt"
        else:
            res.exact_status = "budget"
    return res


def resolve_threads(requested: int | None = None) -> int:
    """Worker count: ``requested`` or all cores, capped by ``$SEGMIN_THREADS`` when set."""
    threads = requested if requested is not None else (os.cpu_count() or 1)
    env = os.environ.get(THREADS_ENV)
    if env:
        threads = min(threads, int(env))
    return max(1, threads)


def run_bench(
    instances: Iterable[tuple[str, IntensityMatrix]],
    algorithms: Sequence[str] = tuple(ALGORITHMS),
    exact_limits: ExactLimits | None = ExactLimits(),
    threads: int | None = 1,
    diagnostics: Sequence[dict] = (),
) -> BenchReport:
    """Evaluate ``algorithms`` on every ``(id, matrix)`` pair.

    Rows are ordered by instance id, so the report does not depend on the
    worker count. ``exact_limits=None`` skips the exact solver entirely.
    """
    algorithms = tuple(algorithms)
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown algorithms {unknown}; choose from {sorted(ALGORITHMS)}")
    jobs = sorted(((name, as_matrix(T), algorithms, exact_limits) for name, T in instances), key=lambda j: j[0])
    ids = [j[0] for j in jobs]
    if len(set(ids)) != len(ids):
        raise ValueError("instance ids must be unique")
    threads = resolve_threads(threads)
    if threads <= 1 or len(jobs) <= 1:
        results = [_evaluate(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_evaluate, jobs))
    diags = sorted(diagnostics, key=lambda d: d["path"])
    return BenchReport(list(algorithms), results, diags)


def load_instances(directory: str | os.PathLike) -> tuple[list[tuple[str, IntensityMatrix]], list[dict]]:
    """Read every non-hidden file in ``directory`` as a matrix.

    Files that fail to parse are returned as ``{"path", "error"}`` diagnostics.
    """
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"{root} is not a directory")
    out, diags = [], []
    for p in sorted(root.iterdir()):
        if p.name.startswith(".") or not p.is_file():
            continue
        try:
            out.append((p.stem if p.suffix == ".txt" else p.name, load_matrix(p)))
        except (FormatError, OSError, UnicodeDecodeError, ValueError) as e:
            diags.append({"path": p.name, "error": str(e)})
    return out, diags


def default_suite(seed: int = 0, gaussian_count: int = 10, random_count: int = 20) -> list[tuple[str, IntensityMatrix]]:
    """Mixed deterministic suite: small random, adversarial, harmonic and Gaussian instances."""
    from .generators import gaussian_dataset, gen_adversarial, gen_harmonic, gen_random

    out = []
    for k in range(random_count):
        s = seed + k
        out.append((f"random-{s:04d}", gen_random(4 + k % 5, 4 + (k * 3) % 5, 2 + k % 4, seed=s)))
    for b in (2, 3, 4):
        for k in (1, 2, 3):
            out.append((f"adversarial-b{b}-k{k}", gen_adversarial(b, k)))
    for b in (3, 4):
        out.append((f"harmonic-b{b}-c2", gen_harmonic(b, 2)))
    for s, T in gaussian_dataset(gaussian_count, seed=seed):
        out.append((f"gaussian-{s:04d}", T))
    return out
