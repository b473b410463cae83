"""Command-line entry point: ``wordprint {stats,gen,bench,sweep}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .bench import (
    FIGURE_VARIANTS,
    BenchConfig,
    cross_check,
    emit_figure_data,
    format_reports,
    load_queries,
    load_words,
    run_grid,
)
from .distances import Metric
from .fingerprint import Variant, supported_metrics
from .index import read_words
from .letters import Strategy, compute_frequencies, select_letters
from .synthetic import corpus_stats, generate_synthetic

log = logging.getLogger("wordprint")


def _choices(value: str, enum_cls) -> list:
    if value == "all":
        return list(enum_cls)
    return [enum_cls(v) for v in value.split(",")]


def _sizes(value: str) -> list[int]:
    sizes = []
    for part in value.split(","):
        lo, _, hi = part.partition("-")
        sizes.extend(range(int(lo), int(hi or lo) + 1))
    return sizes


def cmd_stats(args) -> int:
    words = read_words(args.dict)
    if args.word_length is not None:
        words = [w for w in words if len(w) == args.word_length]
    info = corpus_stats(words)
    freq = compute_frequencies(words)
    info["alphabet_size"] = freq.alphabet_size
    for strategy in Strategy:
        if freq.alphabet_size >= 16:
            info[f"{strategy.value}_16"] = select_letters(freq, 16, strategy).to_line()
    if not args.histogram:
        info.pop("histogram")
    print(json.dumps(info, indent=2))
    return 0


def cmd_gen(args) -> int:
    words = generate_synthetic(args.bytes, args.word_length, seed=args.seed)
    with open(args.out, "wb") as f:
        f.write(b"\n".join(words) + b"\n")
    log.info("wrote %d words to %s", len(words), args.out)
    return 0


def _config(args, metric: Metric) -> BenchConfig:
    return BenchConfig(
        dict_path=args.dict,
        synthetic_bytes=args.synthetic_bytes,
        synthetic_length=args.word_length or 9,
        word_length=args.word_length,
        metric=metric,
        k=args.k,
        b=args.b,
        p=args.p,
        query_count=args.queries,
        iterations=args.iterations,
        max_errors=args.distort,
        seed=args.seed,
        length_filter=args.length_filter,
        queries_path=args.queries_file,
    )


def cmd_bench(args) -> int:
    variants = _choices(args.scheme, Variant)
    strategies = _choices(args.letters, Strategy)
    metrics = _choices(args.metric, Metric)
    explicit = len(variants) == 1 and len(metrics) == 1
    base = _config(args, metrics[0])
    words = load_words(base)
    queries = load_queries(base, words)
    reports = []
    for metric in metrics:
        config = _config(args, metric)
        cells = []
        for v in variants:
            if metric not in supported_metrics(v):
                if explicit:
                    print(f"error: {v.value} fingerprints work only for hamming distance",
                          file=sys.stderr)
                    return 2
                log.warning("skipping %s with %s distance", v.value, metric.value)
                continue
            cells.extend((v, s) for s in strategies)
        if args.check:
            for v, s in cells:
                config.variant, config.strategy = v, s
                bad = cross_check(config, words, queries)
                if bad:
                    log.error("%s/%s: %d queries disagree with the reference scan",
                              v.value, s.value, bad)
                    return 1
        reports.extend(run_grid(config, cells, words, queries))
    sys.stdout.write(format_reports(reports, args.format))
    return 0 if all(r.consistent for r in reports) else 1


def cmd_sweep(args) -> int:
    reports = emit_figure_data(
        _sizes(args.sizes),
        total_bytes=args.synthetic_bytes,
        variants=_choices(args.scheme, Variant),
        strategies=_choices(args.letters, Strategy),
        query_count=args.queries,
        iterations=args.iterations,
        k=args.k,
        seed=args.seed,
    )
    sys.stdout.write(format_reports(reports, args.format))
    return 0 if all(r.consistent for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordprint",
        description="Approximate dictionary matching with 16-bit word fingerprints.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("--dict", required=True, help="newline-separated word list")
    p.add_argument("--word-length", type=int)
    p.add_argument("--histogram", action="store_true", help="include the length histogram")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="write a synthetic English corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--bytes", type=int, default=10_000_000)
    p.add_argument("--word-length", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    def common(p, queries, iterations, scheme, synthetic_bytes):
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--scheme", default=scheme,
                       help="occurrence, halved, count, position, a comma list, or all")
        p.add_argument("--letters", default="common",
                       help="common, mixed, rare, a comma list, or all")
        p.add_argument("--queries", type=int, default=queries)
        p.add_argument("--iterations", type=int, default=iterations)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--synthetic-bytes", type=int, default=synthetic_bytes,
                       help="corpus size when no --dict is given")
        p.add_argument("--format", choices=["csv", "text", "json-lines"], default="csv")

    p = sub.add_parser("bench", help="filter versus naive benchmark")
    p.add_argument("--dict", help="word list; synthetic English data if omitted")
    p.add_argument("--metric", default="hamming", help="hamming, levenshtein, or all")
    p.add_argument("--word-length", type=int, help="keep only words of this length")
    p.add_argument("--distort", type=int, default=0,
                   help="max substitutions per query, each applied with probability 0.5")
    p.add_argument("--length-filter", action="store_true",
                   help="skip words whose length differs by more than k (levenshtein)")
    p.add_argument("--queries-file", help="newline-separated queries instead of sampling")
    p.add_argument("--b", type=int, default=2, help="bits per count")
    p.add_argument("--p", type=int, default=3, help="bits per position")
    p.add_argument("--check", action="store_true",
                   help="cross-check filtered results against the reference scan first")
    common(p, queries=1000, iterations=100, scheme="occurrence",
           synthetic_bytes=10_000_000)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("sweep", help="comparison time against word size (synthetic data)")
    p.add_argument("--sizes", default="6-30", help="e.g. 6-30 or 6,9,12")
    common(p, queries=100, iterations=1, scheme=",".join(v.value for v in FIGURE_VARIANTS),
           synthetic_bytes=100_000)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
