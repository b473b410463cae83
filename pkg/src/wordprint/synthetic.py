"""Synthetic corpora and query workloads."""

from __future__ import annotations

import random
from collections import Counter
from typing import Mapping, Sequence

import numpy as np

from .letters import ENGLISH_LETTER_FREQUENCIES


def generate_synthetic(
    total_bytes: int,
    word_length: int,
    letter_frequencies: Mapping[str, float] | None = None,
    seed: int = 0,
) -> list[bytes]:
    """Random words of ``word_length`` symbols, drawn independently.

    Enough words are generated to cover ``total_bytes`` bytes. Symbols
    follow ``letter_frequencies`` (English letters by default), which need
    not be normalized.
    """
    if word_length < 1:
        raise ValueError(f"word_length must be positive, got {word_length}")
    freqs = letter_frequencies or ENGLISH_LETTER_FREQUENCIES
    symbols = np.frombuffer("".join(freqs).encode("latin-1"), dtype=np.uint8)
    probs = np.array(list(freqs.values()), dtype=float)
    probs /= probs.sum()
    count = -(-total_bytes // word_length)
    rng = np.random.default_rng(seed)
    data = rng.choice(symbols, size=count * word_length, p=probs).tobytes()
    return [data[i : i + word_length] for i in range(0, len(data), word_length)]


def corpus_stats(words: Sequence[bytes]) -> dict:
    """Length histogram, mode length (ties to the shorter) and byte size."""
    if not words:
        raise ValueError("corpus is empty")
    hist = Counter(len(w) for w in words)
    mode = min(hist, key=lambda n: (-hist[n], n))
    return {
        "words": len(words),
        "bytes": sum(n * c for n, c in hist.items()),
        "mode_length": mode,
        "histogram": dict(sorted(hist.items())),
    }


def sample_queries(
    words: Sequence[bytes], n: int, max_errors: int = 0, seed: int = 0
) -> list[bytes]:
    """Draw ``n`` words with replacement and distort each one.

    Up to ``max_errors`` substitutions are attempted per query, each with
    probability 0.5, at a random position and with a random symbol from
    the corpus alphabet. Substitutions keep the length, so queries stay
    valid for Hamming distance.
    """
    if not words:
        raise ValueError("cannot sample queries from an empty dictionary")
    rng = random.Random(seed)
    alphabet = sorted(set(b"".join(words)))
    queries = []
    for w in rng.choices(words, k=n):
        q = bytearray(w)
        for _ in range(max_errors):
            if q and rng.random() < 0.5:
                q[rng.randrange(len(q))] = rng.choice(alphabet)
        queries.append(bytes(q))
    return queries
