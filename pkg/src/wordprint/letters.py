"""Symbol frequencies and letter-set selection.

Every fingerprint scheme is parameterized by an ordered subset of the
alphabet. The subset is picked from the symbol frequencies of the word
collection: the most frequent symbols (common), the least frequent ones
(rare), or a half-and-half blend of both (mixed).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

# Relative English letter frequencies in percent (Lewand, Cryptological
# Mathematics, p. 36).
ENGLISH_LETTER_FREQUENCIES: Mapping[str, float] = {
    "a": 8.167, "b": 1.492, "c": 2.782, "d": 4.253, "e": 12.702,
    "f": 2.228, "g": 2.015, "h": 6.094, "i": 6.966, "j": 0.153,
    "k": 0.772, "l": 4.025, "m": 2.406, "n": 6.749, "o": 7.507,
    "p": 1.929, "q": 0.095, "r": 5.987, "s": 6.327, "t": 9.056,
    "u": 2.758, "v": 0.978, "w": 2.360, "x": 0.150, "y": 1.974,
    "z": 0.074,
}


class Strategy(str, enum.Enum):
    COMMON = "common"
    MIXED = "mixed"
    RARE = "rare"


@dataclass(frozen=True)
class SymbolFrequencyTable:
    """Occurrence count of every byte value in a corpus."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != 256:
            raise ValueError(f"expected 256 counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def alphabet_size(self) -> int:
        """Number of symbols that occur at least once."""
        return sum(1 for c in self.counts if c)

    def alphabet(self) -> bytes:
        return bytes(c for c in range(256) if self.counts[c])

    def ranked(self, descending: bool = True) -> list[int]:
        """Nonzero symbols ordered by frequency.

        Ties go to the smaller byte in descending order; the ascending order
        is the exact reverse, so top-k and bottom-k never share a symbol
        unless the alphabet has fewer than 2k symbols.
        """
        present = [c for c in range(256) if self.counts[c]]
        order = sorted(present, key=lambda c: (-self.counts[c], c))
        return order if descending else order[::-1]

    @classmethod
    def from_mapping(cls, counts: Mapping[int | str, int]) -> SymbolFrequencyTable:
        table = [0] * 256
        for sym, n in counts.items():
            table[ord(sym) if isinstance(sym, str) else sym] = int(n)
        return cls(tuple(table))


@dataclass(frozen=True)
class LetterSet:
    """An ordered subset of the alphabet; a symbol's index is its slot."""

    symbols: bytes
    slot_of: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"letters must be distinct: {self.symbols!r}")
        object.__setattr__(self, "slot_of", {c: q for q, c in enumerate(self.symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def to_line(self) -> str:
        """Single-line rendering in slot order, for reports."""
        return self.symbols.decode("latin-1")

    @classmethod
    def from_line(cls, line: str) -> LetterSet:
        return cls(line.rstrip("\n").encode("latin-1"))


def compute_frequencies(corpus: bytes | Iterable[bytes]) -> SymbolFrequencyTable:
    """Count every byte of ``corpus``.

    ``corpus`` may be one byte string or an iterable of words, which are
    counted as if concatenated without separators.
    """
    if not isinstance(corpus, (bytes, bytearray, memoryview)):
        corpus = b"".join(corpus)
    data = np.frombuffer(corpus, dtype=np.uint8)
    counts = np.bincount(data, minlength=256)
    return SymbolFrequencyTable(tuple(int(c) for c in counts))


def english_default_letters() -> str:
    """The 26 English letters in descending frequency order."""
    return "".join(
        sorted(ENGLISH_LETTER_FREQUENCIES, key=lambda c: -ENGLISH_LETTER_FREQUENCIES[c])
    )


def english_frequency_table(scale: int = 1000) -> SymbolFrequencyTable:
    """Integer frequency table for lowercase English (percent times ``scale``)."""
    return SymbolFrequencyTable.from_mapping(
        {c: round(f * scale) for c, f in ENGLISH_LETTER_FREQUENCIES.items()}
    )


def select_letters(
    freq: SymbolFrequencyTable, count: int, strategy: Strategy | str
) -> LetterSet:
    """Pick ``count`` symbols from ``freq`` according to ``strategy``.

    Common letters come in descending frequency order and rare letters in
    ascending order (see ``SymbolFrequencyTable.ranked`` for ties). A
    mixed set takes ``ceil(count / 2)`` common letters followed by
    ``floor(count / 2)`` rare ones.

    Raises:
        ValueError: if the collection has fewer than ``count`` distinct
            symbols, or the two halves of a mixed set would overlap.
    """
    strategy = Strategy(strategy)
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if freq.alphabet_size < count:
        raise ValueError(
            f"collection has {freq.alphabet_size} distinct symbols, need {count}"
        )
    common = freq.ranked(descending=True)
    rare = freq.ranked(descending=False)
    if strategy is Strategy.COMMON:
        chosen = common[:count]
    elif strategy is Strategy.RARE:
        chosen = rare[:count]
    else:
        head = common[: (count + 1) // 2]
        tail = rare[: count // 2]
        if set(head) & set(tail):
            raise ValueError(
                f"alphabet of {freq.alphabet_size} symbols is too small for a "
                f"mixed set of {count}"
            )
        chosen = head + tail
    return LetterSet(bytes(chosen))
