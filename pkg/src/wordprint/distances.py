"""Bounded Hamming and Levenshtein verifiers.

Both return the exact distance when it is at most ``k`` and ``None``
otherwise, so callers can write ``if hamming_bounded(a, b, k) is not None``.
"""

from __future__ import annotations

import enum


class Metric(str, enum.Enum):
    HAMMING = "hamming"
    LEVENSHTEIN = "levenshtein"


class LengthMismatchError(ValueError):
    """Hamming distance requested for strings of different lengths."""


def hamming_bounded(s1: bytes, s2: bytes, k: int) -> int | None:
    """Mismatch count of ``s1`` and ``s2``, stopping at the (k+1)-th mismatch."""
    if len(s1) != len(s2):
        raise LengthMismatchError(f"lengths differ: {len(s1)} != {len(s2)}")
    d = 0
    for a, b in zip(s1, s2):
        if a != b:
            d += 1
            if d > k:
                return None
    return d


def levenshtein_bounded(s1: bytes, s2: bytes, k: int) -> int | None:
    """Edit distance of ``s1`` and ``s2`` if it is at most ``k``.

    Only the diagonal band ``|i - j| <= k`` of the dynamic-programming
    matrix is evaluated, two rows at a time, so the cost is
    O(k * min(len(s1), len(s2))). Cells outside the band count as infinite.
    """
    n, m = len(s1), len(s2)
    if abs(n - m) > k:
        return None
    if k == 0:
        return 0 if s1 == s2 else None
    if n > m:
        s1, s2, n, m = s2, s1, m, n

    inf = k + 1
    prev = [inf] * (m + 1)
    cur = [inf] * (m + 1)
    for j in range(min(m, k) + 1):
        prev[j] = j

    for i in range(1, n + 1):
        lo = i - k
        if lo > 0:
            cur[lo - 1] = inf
        else:
            lo = 1
            cur[0] = i
        hi = min(m, i + k)
        c = s1[i - 1]
        best = cur[lo - 1]
        left = best
        for j in range(lo, hi + 1):
            v = prev[j - 1] + (c != s2[j - 1])
            up = prev[j] + 1
            if up < v:
                v = up
            if left + 1 < v:
                v = left + 1
            if v > inf:
                v = inf
            cur[j] = v
            left = v
            if v < best:
                best = v
        if best > k:
            return None
        prev, cur = cur, prev

    d = prev[m]
    return d if d <= k else None
