"""Fingerprinted word collections and filter-then-verify queries."""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from .distances import Metric, hamming_bounded, levenshtein_bounded
from .fingerprint import ComparisonTables, Scheme, build, build_many, word_lengths


@dataclass(frozen=True)
class QueryStats:
    """Per-query bookkeeping of how each dictionary word was handled.

    ``compared == rejected_by_length + rejected_by_fingerprint + verified``
    always holds.
    """

    compared: int = 0
    rejected_by_length: int = 0
    rejected_by_fingerprint: int = 0
    verified: int = 0
    matches: int = 0

    def __add__(self, other: QueryStats) -> QueryStats:
        return QueryStats(
            *(getattr(self, f.name) + getattr(other, f.name) for f in fields(self))
        )

    @property
    def rejection_rate(self) -> float:
        """Share of length-compatible words rejected by fingerprints alone."""
        eligible = self.compared - self.rejected_by_length
        return self.rejected_by_fingerprint / eligible if eligible else 0.0


@dataclass(frozen=True)
class LengthGroup:
    indices: Sequence[int]
    words: list[bytes]
    fingerprints: list[int]


@dataclass(frozen=True)
class FingerprintedDictionary:
    words: list[bytes]
    fingerprints: list[int]
    scheme: Scheme
    tables: ComparisonTables
    by_length: dict[int, LengthGroup]

    def __len__(self) -> int:
        return len(self.words)

    @property
    def nbytes(self) -> int:
        return sum(len(w) for w in self.words)


def build_dictionary(words: Iterable[bytes], scheme: Scheme) -> FingerprintedDictionary:
    """Fingerprint every word and build the comparison tables for ``scheme``."""
    words = list(words)
    tables = ComparisonTables.build(scheme)
    lengths = word_lengths(words)
    fps_array = build_many(words, scheme, lengths)
    fps = fps_array.tolist()
    distinct = np.unique(lengths).tolist()
    if len(distinct) == 1:
        by_length = {distinct[0]: LengthGroup(range(len(words)), words, fps)}
    else:
        by_length = {}
        for n in distinct:
            idx = np.flatnonzero(lengths == n).tolist()
            by_length[n] = LengthGroup(
                idx, [words[i] for i in idx], fps_array[idx].tolist()
            )
    return FingerprintedDictionary(words, fps, scheme, tables, by_length)


def read_words(path) -> list[bytes]:
    """Newline-separated words, raw bytes; blank lines and ``\\r`` are dropped."""
    with open(path, "rb") as f:
        return [w for w in f.read().replace(b"\r", b"").split(b"\n") if w]


def query(
    dictionary: FingerprintedDictionary,
    pattern: bytes,
    k: int,
    metric: Metric | str,
    use_filter: bool = True,
    length_filter: bool = False,
) -> tuple[list[int], QueryStats]:
    """Indices of dictionary words within distance ``k`` of ``pattern``.

    Hamming queries only look at words of the pattern's length. Levenshtein
    queries skip words whose length differs by more than ``k`` only when
    ``length_filter`` is set. With ``use_filter`` the pattern is
    fingerprinted once and every candidate whose fingerprint proves it is
    too far is skipped without verification; the match list is the same
    either way.

    Raises:
        ValueError: if ``use_filter`` is set and the scheme cannot filter
            for ``metric``.
    """
    metric = Metric(metric)
    if use_filter and metric not in dictionary.scheme.metric_support:
        raise ValueError(
            f"{dictionary.scheme.variant.value} fingerprints do not support "
            f"{metric.value} distance"
        )
    n = len(pattern)
    total = len(dictionary.words)
    if metric is Metric.HAMMING:
        group = dictionary.by_length.get(n)
        candidates = [group] if group else []
        verify = hamming_bounded
    elif length_filter:
        candidates = [
            g for length, g in dictionary.by_length.items() if abs(length - n) <= k
        ]
        verify = levenshtein_bounded
    else:
        candidates = [
            LengthGroup(range(total), dictionary.words, dictionary.fingerprints)
        ]
        verify = levenshtein_bounded

    matches: list[int] = []
    eligible = rejected = verified = 0
    if use_filter:
        qf = build(pattern, dictionary.scheme)
        lower_bound = dictionary.tables.lower_bound
        for g in candidates:
            eligible += len(g.words)
            for i, w, f in zip(g.indices, g.words, g.fingerprints):
                if lower_bound[f ^ qf] > k:
                    rejected += 1
                    continue
                verified += 1
                if verify(w, pattern, k) is not None:
                    matches.append(i)
    else:
        for g in candidates:
            eligible += len(g.words)
            verified += len(g.words)
            for i, w in zip(g.indices, g.words):
                if verify(w, pattern, k) is not None:
                    matches.append(i)
    if len(candidates) > 1:
        matches.sort()
    stats = QueryStats(
        compared=total,
        rejected_by_length=total - eligible,
        rejected_by_fingerprint=rejected,
        verified=verified,
        matches=len(matches),
    )
    return matches, stats
