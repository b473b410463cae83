"""Slow, obviously correct reference implementations.

They are kept in the library so the benchmark can cross-check the fast
paths on user data. None of them touch lookup tables or early exits.
"""

from __future__ import annotations

from typing import Sequence

from .distances import LengthMismatchError, Metric
from .fingerprint import Scheme, Variant


def levenshtein_full(s1: bytes, s2: bytes) -> int:
    """Edit distance via the complete dynamic-programming matrix."""
    n, m = len(s1), len(s2)
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dist[i][0] = i
    for j in range(m + 1):
        dist[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if s1[i - 1] == s2[j - 1] else 1
            dist[i][j] = min(
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
                dist[i - 1][j - 1] + cost,
            )
    return dist[n][m]


def hamming_full(s1: bytes, s2: bytes) -> int:
    if len(s1) != len(s2):
        raise LengthMismatchError(f"lengths differ: {len(s1)} != {len(s2)}")
    return sum(a != b for a, b in zip(s1, s2))


def naive_scan(
    words: Sequence[bytes], pattern: bytes, k: int, metric: Metric | str
) -> list[int]:
    """Indices of all words within distance ``k`` of ``pattern``."""
    metric = Metric(metric)
    out = []
    for i, w in enumerate(words):
        if metric is Metric.HAMMING:
            if len(w) == len(pattern) and hamming_full(w, pattern) <= k:
                out.append(i)
        elif levenshtein_full(w, pattern) <= k:
            out.append(i)
    return out


def fingerprint_distance_reference(f1: int, f2: int, scheme: Scheme) -> int:
    """Fingerprint distance computed field by field.

    Occurrence variants count differing bits. Count and position variants
    count differing fields.
    """
    diff = f1 ^ f2
    if scheme.variant in (Variant.OCCURRENCE, Variant.OCCURRENCE_HALVED):
        return bin(diff).count("1")
    total, shift = 0, 16
    for width in scheme.field_widths():
        shift -= width
        if (diff >> shift) & ((1 << width) - 1):
            total += 1
    return total
