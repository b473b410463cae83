"""Timed filter-versus-naive benchmark runs and report rows."""

from __future__ import annotations

import csv
import io
import json
import logging
import platform
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .distances import Metric
from .fingerprint import Scheme, Variant
from .index import (
    FingerprintedDictionary,
    QueryStats,
    build_dictionary,
    query,
    read_words,
)
from .letters import Strategy, compute_frequencies
from .oracles import naive_scan
from .synthetic import generate_synthetic, sample_queries

log = logging.getLogger(__name__)

CSV_COLUMNS = [
    "dataset", "variant", "strategy", "metric", "k", "word_length",
    "T_n_ns", "T_f_ns", "speedup", "rejection_pct", "construction_mbps", "matches",
]


@dataclass
class BenchConfig:
    dict_path: str | None = None
    synthetic_bytes: int = 10_000_000
    synthetic_length: int = 9
    word_length: int | None = None
    metric: Metric = Metric.HAMMING
    k: int = 1
    variant: Variant = Variant.OCCURRENCE
    strategy: Strategy = Strategy.COMMON
    b: int = 2
    p: int = 3
    query_count: int = 1000
    iterations: int = 100
    max_errors: int = 0
    seed: int = 0
    length_filter: bool = False
    queries_path: str | None = None
    dataset: str | None = None

    def __post_init__(self) -> None:
        self.metric = Metric(self.metric)
        self.variant = Variant(self.variant)
        self.strategy = Strategy(self.strategy)
        if self.query_count < 1:
            raise ValueError("query_count must be at least 1")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if self.k < 1:
            raise ValueError("k must be at least 1")

    @property
    def dataset_name(self) -> str:
        if self.dataset:
            return self.dataset
        if self.dict_path:
            return self.dict_path.rsplit("/", 1)[-1]
        return "synthetic-eng"


@dataclass
class BenchReport:
    dataset: str
    variant: str
    strategy: str
    metric: str
    k: int
    word_length: int | None
    T_n_ns: float
    T_f_ns: float
    speedup: float
    rejection_pct: float
    construction_mbps: float
    matches: int
    naive_matches: int
    letters: str
    words: int
    queries: int
    pairs: int
    iterations: int
    match_sets_equal: bool = True
    stats: QueryStats = field(default_factory=QueryStats)
    environment: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.match_sets_equal and self.matches == self.naive_matches

    def row(self) -> dict:
        d = asdict(self)
        return {c: d[c] for c in CSV_COLUMNS}

    def as_dict(self) -> dict:
        d = asdict(self)
        d["consistent"] = self.consistent
        return d


def environment() -> dict:
    return {
        "python": platform.python_version(),
        "implementation": platform.python_implementation(),
        "machine": platform.machine(),
        "processor": platform.processor(),
        "system": platform.system(),
        "numpy": np.__version__,
    }


def load_words(config: BenchConfig) -> list[bytes]:
    if config.dict_path:
        words = read_words(config.dict_path)
    else:
        words = generate_synthetic(
            config.synthetic_bytes, config.synthetic_length, seed=config.seed
        )
    if config.word_length is not None:
        words = [w for w in words if len(w) == config.word_length]
    if not words:
        raise ValueError("no words left to benchmark")
    return words


def load_queries(config: BenchConfig, words: Sequence[bytes]) -> list[bytes]:
    if config.queries_path:
        return read_words(config.queries_path)[: config.query_count]
    return sample_queries(words, config.query_count, config.max_errors, config.seed)


def measure_construction(
    words: Sequence[bytes], scheme: Scheme, repeats: int = 1
) -> tuple[FingerprintedDictionary, float]:
    """Build the dictionary ``repeats`` times; returns it and the mean MB/s.

    The timed region covers the lookup tables and the fingerprint container.
    """
    nbytes = sum(map(len, words))
    elapsed = 0
    for _ in range(repeats):
        start = time.perf_counter_ns()
        d = build_dictionary(words, scheme)
        elapsed += time.perf_counter_ns() - start
    mbps = nbytes * repeats / 1e6 / (elapsed / 1e9) if elapsed else 0.0
    return d, mbps


@dataclass
class _Timing:
    elapsed_ns: int
    matches: list[list[int]]
    stats: QueryStats
    pairs: int


def _time_queries(
    d: FingerprintedDictionary,
    queries: Sequence[bytes],
    config: BenchConfig,
    use_filter: bool,
) -> _Timing:
    elapsed = 0
    first: list[list[int]] = []
    stats = QueryStats()
    k, metric, lf = config.k, config.metric, config.length_filter
    for it in range(config.iterations):
        start = time.perf_counter_ns()
        results = [query(d, q, k, metric, use_filter, lf) for q in queries]
        elapsed += time.perf_counter_ns() - start
        if it == 0:
            first = [m for m, _ in results]
            for _, s in results:
                stats += s
    return _Timing(elapsed, first, stats, stats.compared)


def run_grid(
    config: BenchConfig,
    cells: Iterable[tuple[Variant | str, Strategy | str]],
    words: Sequence[bytes] | None = None,
    queries: Sequence[bytes] | None = None,
) -> list[BenchReport]:
    """Benchmark several (variant, strategy) cells over one workload.

    The naive scan is timed once and shared by every cell. Cells whose
    variant cannot filter for ``config.metric`` raise ``ValueError``.
    """
    words = list(words) if words is not None else load_words(config)
    queries = list(queries) if queries is not None else load_queries(config, words)
    freq = compute_frequencies(words)
    cells = [(Variant(v), Strategy(s)) for v, s in cells]
    schemes = [Scheme.from_frequencies(v, freq, s, config.b, config.p) for v, s in cells]
    for scheme in schemes:
        if config.metric not in scheme.metric_support:
            raise ValueError(
                f"{scheme.variant.value} fingerprints cannot filter "
                f"{config.metric.value} distance"
            )

    env = environment()
    naive = None
    reports = []
    for (variant, strategy), scheme in zip(cells, schemes):
        d, mbps = measure_construction(words, scheme, min(config.iterations, 10))
        if naive is None:
            naive = _time_queries(d, queries, config, use_filter=False)
        filtered = _time_queries(d, queries, config, use_filter=True)
        total_pairs = filtered.pairs * config.iterations
        t_n = naive.elapsed_ns / (naive.pairs * config.iterations) if naive.pairs else 0.0
        t_f = filtered.elapsed_ns / total_pairs if total_pairs else 0.0
        report = BenchReport(
            dataset=config.dataset_name,
            variant=variant.value,
            strategy=strategy.value,
            metric=config.metric.value,
            k=config.k,
            word_length=config.word_length,
            T_n_ns=t_n,
            T_f_ns=t_f,
            speedup=t_n / t_f if t_f else float("inf"),
            rejection_pct=100.0 * filtered.stats.rejection_rate,
            construction_mbps=mbps,
            matches=sum(map(len, filtered.matches)),
            naive_matches=sum(map(len, naive.matches)),
            letters=scheme.letters.to_line(),
            words=len(words),
            queries=len(queries),
            pairs=filtered.pairs,
            iterations=config.iterations,
            match_sets_equal=filtered.matches == naive.matches,
            stats=filtered.stats,
            environment=env,
        )
        if not report.consistent:
            log.error("%s/%s: filtered and naive matches differ", variant.value, strategy.value)
        log.info(
            "%s/%s %s k=%d speedup %.2f rejected %.2f%%",
            variant.value, strategy.value, config.metric.value, config.k,
            report.speedup, report.rejection_pct,
        )
        reports.append(report)
    return reports


def run_benchmark(
    config: BenchConfig,
    words: Sequence[bytes] | None = None,
    queries: Sequence[bytes] | None = None,
) -> BenchReport:
    """Benchmark the configured variant and strategy against the naive scan."""
    return run_grid(config, [(config.variant, config.strategy)], words, queries)[0]


def cross_check(
    config: BenchConfig,
    words: Sequence[bytes],
    queries: Sequence[bytes],
    limit: int = 20,
) -> int:
    """Compare filtered queries with the reference scan; returns disagreements."""
    freq = compute_frequencies(words)
    scheme = Scheme.from_frequencies(config.variant, freq, config.strategy, config.b, config.p)
    d = build_dictionary(words, scheme)
    bad = 0
    for q in queries[:limit]:
        got = query(d, q, config.k, config.metric, length_filter=config.length_filter)[0]
        if got != naive_scan(words, q, config.k, config.metric):
            bad += 1
    return bad


FIGURE_VARIANTS = (Variant.OCCURRENCE, Variant.COUNT, Variant.POSITION)


def emit_figure_data(
    sizes: Iterable[int],
    total_bytes: int = 100_000,
    variants: Sequence[Variant | str] = FIGURE_VARIANTS,
    strategies: Sequence[Strategy | str] = tuple(Strategy),
    query_count: int = 100,
    iterations: int = 1,
    k: int = 1,
    seed: int = 0,
) -> list[BenchReport]:
    """Hamming comparison time against word size on synthetic English data.

    One report per (size, variant, strategy); every report carries the
    naive time measured for its size.
    """
    cells = [(v, s) for v in variants for s in strategies]
    reports = []
    for size in sizes:
        config = BenchConfig(
            synthetic_bytes=total_bytes,
            synthetic_length=size,
            word_length=size,
            metric=Metric.HAMMING,
            k=k,
            query_count=query_count,
            iterations=iterations,
            seed=seed,
        )
        reports.extend(run_grid(config, cells))
    return reports


def format_reports(reports: Sequence[BenchReport], fmt: str) -> str:
    out = io.StringIO()
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            row = r.row()
            for key in ("T_n_ns", "T_f_ns", "construction_mbps"):
                row[key] = f"{row[key]:.2f}"
            row["speedup"] = f"{row['speedup']:.3f}"
            row["rejection_pct"] = f"{row['rejection_pct']:.2f}"
            row["word_length"] = "" if row["word_length"] is None else row["word_length"]
            writer.writerow(row)
    elif fmt == "json-lines":
        for r in reports:
            out.write(json.dumps(r.as_dict()) + "\n")
    elif fmt == "text":
        for r in reports:
            out.write(
                f"{r.dataset} {r.variant:>10}/{r.strategy:<6} {r.metric:<11} k={r.k} "
                f"T_n={r.T_n_ns:8.1f}ns T_f={r.T_f_ns:8.1f}ns speedup={r.speedup:5.2f} "
                f"rejected={r.rejection_pct:6.2f}% build={r.construction_mbps:7.1f}MB/s "
                f"matches={r.matches}/{r.naive_matches} letters={r.letters!r}\n"
            )
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return out.getvalue()
