"""16-bit word fingerprints and their comparison.

A fingerprint is a plain ``int`` in ``[0, 2**16)``. Slot 0 of a scheme is
the most significant field, so ``format(fp, "016b")`` reads left to right
in slot order.

Four variants exist:

* occurrence: one bit per letter, set if the letter occurs in the word;
* occurrence halved: two bits per letter, for the first ``n // 2`` symbols
  and for the rest of the word;
* count: a ``b``-bit saturating counter per letter;
* position: a ``p``-bit field per letter holding its first 0-indexed
  position (all ones if absent or too far), followed by occurrence bits
  for extra letters in the leftover bits.

Two fingerprints are compared with one xor and one table lookup. The
lookup yields the fingerprint distance; half of it, rounded up, is a lower
bound on the Hamming or Levenshtein distance of the underlying words.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .distances import Metric
from .letters import LetterSet, Strategy, SymbolFrequencyTable, select_letters

WIDTH = 16
_SPACE = 1 << WIDTH


class Variant(str, enum.Enum):
    OCCURRENCE = "occurrence"
    OCCURRENCE_HALVED = "halved"
    COUNT = "count"
    POSITION = "position"


def supported_metrics(variant: Variant | str) -> frozenset[Metric]:
    """Distances a variant can lower-bound; halved and position are Hamming-only."""
    if Variant(variant) in (Variant.OCCURRENCE, Variant.COUNT):
        return frozenset({Metric.HAMMING, Metric.LEVENSHTEIN})
    return frozenset({Metric.HAMMING})


@dataclass(frozen=True)
class Scheme:
    """Fingerprint variant, its parameters, and the letters it tracks.

    ``b`` is only used by the count variant and ``p`` by the position
    variant.
    """

    variant: Variant
    letters: LetterSet
    b: int = 2
    p: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.variant is Variant.COUNT and (self.b < 1 or WIDTH % self.b):
            raise ValueError(f"bits per count must divide {WIDTH}, got {self.b}")
        if self.variant is Variant.POSITION and not 1 <= self.p <= WIDTH:
            raise ValueError(f"bits per position must be in [1, {WIDTH}], got {self.p}")
        need = self.capacity(self.variant, self.b, self.p)
        if len(self.letters) != need:
            raise ValueError(
                f"{self.variant.value} scheme needs {need} letters, got {len(self.letters)}"
            )

    @staticmethod
    def capacity(variant: Variant | str, b: int = 2, p: int = 3) -> int:
        """Number of letters a 16-bit fingerprint of ``variant`` holds."""
        variant = Variant(variant)
        if variant is Variant.OCCURRENCE:
            return WIDTH
        if variant is Variant.OCCURRENCE_HALVED:
            return WIDTH // 2
        if variant is Variant.COUNT:
            return WIDTH // b
        return WIDTH // p + WIDTH % p

    @classmethod
    def from_frequencies(
        cls,
        variant: Variant | str,
        freq: SymbolFrequencyTable,
        strategy: Strategy | str = Strategy.COMMON,
        b: int = 2,
        p: int = 3,
    ) -> Scheme:
        letters = select_letters(freq, cls.capacity(variant, b, p), strategy)
        return cls(Variant(variant), letters, b=b, p=p)

    @property
    def metric_support(self) -> frozenset[Metric]:
        return supported_metrics(self.variant)

    @property
    def size_bytes(self) -> int:
        return WIDTH // 8

    @property
    def position_slots(self) -> int:
        return WIDTH // self.p

    def field_widths(self) -> list[int]:
        """Bit widths of the fields from most to least significant."""
        if self.variant is Variant.OCCURRENCE:
            return [1] * WIDTH
        if self.variant is Variant.OCCURRENCE_HALVED:
            return [2] * (WIDTH // 2)
        if self.variant is Variant.COUNT:
            return [self.b] * (WIDTH // self.b)
        return [self.p] * self.position_slots + [1] * (WIDTH % self.p)

    @cached_property
    def _shifts(self) -> list[int]:
        shifts, top = [], WIDTH
        for w in self.field_widths():
            top -= w
            shifts.append(top)
        return shifts

    @cached_property
    def _occurrence_masks(self) -> list[int]:
        # byte -> bit(s) to OR in; position leftovers use the tail slots
        masks = [0] * 256
        if self.variant is Variant.POSITION:
            first = self.position_slots
            for q in range(first, len(self.letters)):
                masks[self.letters[q]] = 1 << self._shifts[q]
        elif self.variant is Variant.OCCURRENCE:
            for q, c in enumerate(self.letters):
                masks[c] = 1 << self._shifts[q]
        return masks

    @cached_property
    def _halved_masks(self) -> tuple[list[int], list[int]]:
        first, second = [0] * 256, [0] * 256
        for q, c in enumerate(self.letters):
            first[c] = 2 << self._shifts[q]
            second[c] = 1 << self._shifts[q]
        return first, second

    @cached_property
    def _count_shift(self) -> list[int]:
        shift = [-1] * 256
        for q, c in enumerate(self.letters):
            shift[c] = self._shifts[q]
        return shift


def build_occurrence(s: bytes, scheme: Scheme) -> int:
    masks = scheme._occurrence_masks
    fp = 0
    for c in s:
        fp |= masks[c]
    return fp


def build_occurrence_halved(s: bytes, scheme: Scheme) -> int:
    first, second = scheme._halved_masks
    half = len(s) // 2
    fp = 0
    for c in s[:half]:
        fp |= first[c]
    for c in s[half:]:
        fp |= second[c]
    return fp


def build_count(s: bytes, scheme: Scheme) -> int:
    """Saturating per-letter counts; a full counter means "that many or more"."""
    shift_of = scheme._count_shift
    top = (1 << scheme.b) - 1
    fp = 0
    for c in s:
        shift = shift_of[c]
        if shift >= 0 and (fp >> shift) & top != top:
            fp += 1 << shift
    return fp


def build_position(s: bytes, scheme: Scheme) -> int:
    top = (1 << scheme.p) - 1
    shifts = scheme._shifts
    fp = 0
    for q in range(scheme.position_slots):
        pos = s.find(scheme.letters[q])
        if pos < 0 or pos > top:
            pos = top
        fp |= pos << shifts[q]
    for q in range(scheme.position_slots, len(scheme.letters)):
        if scheme.letters[q] in s:
            fp |= 1 << shifts[q]
    return fp


_BUILDERS = {
    Variant.OCCURRENCE: build_occurrence,
    Variant.OCCURRENCE_HALVED: build_occurrence_halved,
    Variant.COUNT: build_count,
    Variant.POSITION: build_position,
}


def build(s: bytes, scheme: Scheme) -> int:
    """Fingerprint of ``s`` under ``scheme``."""
    return _BUILDERS[scheme.variant](s, scheme)


def build_many(
    words: Sequence[bytes], scheme: Scheme, lengths: np.ndarray | None = None
) -> np.ndarray:
    """Fingerprints of many words at once, as a ``uint16`` array.

    Words are grouped by length and processed as 2-D byte matrices; the
    result equals ``[build(w, scheme) for w in words]``. ``lengths`` may
    pass in precomputed ``word_lengths(words)``.
    """
    n = len(words)
    out = np.zeros(n, dtype=np.uint16)
    if not n:
        return out
    if lengths is None:
        lengths = word_lengths(words)
    data = np.frombuffer(b"".join(words), dtype=np.uint8)
    first = int(lengths[0])
    if (lengths == first).all():
        out[:] = _build_block(data.reshape(n, first), scheme)
        return out
    offsets = np.zeros(n, dtype=np.int64)
    np.cumsum(lengths[:-1], out=offsets[1:])
    for length in np.unique(lengths).tolist():
        idx = np.flatnonzero(lengths == length)
        block = data[offsets[idx, None] + np.arange(length)]
        out[idx] = _build_block(block, scheme)
    return out


def word_lengths(words: Sequence[bytes]) -> np.ndarray:
    return np.fromiter(map(len, words), dtype=np.int64, count=len(words))


def _build_block(block: np.ndarray, scheme: Scheme) -> np.ndarray:
    rows, length = block.shape
    variant = scheme.variant
    shifts = scheme._shifts
    if variant is Variant.OCCURRENCE:
        masks = np.array(scheme._occurrence_masks, dtype=np.uint16)
        return np.bitwise_or.reduce(masks[block], axis=1, initial=0)
    if variant is Variant.OCCURRENCE_HALVED:
        first, second = (np.array(m, dtype=np.uint16) for m in scheme._halved_masks)
        half = length // 2
        return np.bitwise_or.reduce(
            first[block[:, :half]], axis=1, initial=0
        ) | np.bitwise_or.reduce(second[block[:, half:]], axis=1, initial=0)
    # byte -> slot, with unused bytes mapped to a spill slot past the end
    slots = len(scheme.letters)
    slot_of = np.full(256, slots, dtype=np.intp)
    slot_of[np.frombuffer(scheme.letters.symbols, dtype=np.uint8)] = np.arange(slots)
    ids = slot_of[block]
    row_base = np.arange(rows, dtype=np.intp)[:, None] * (slots + 1)
    field_shifts = np.array(shifts, dtype=np.uint16)
    if variant is Variant.COUNT:
        counts = np.bincount((row_base + ids).ravel(), minlength=rows * (slots + 1))
        counts = np.minimum(counts.reshape(rows, slots + 1)[:, :slots], (1 << scheme.b) - 1)
        return np.bitwise_or.reduce(
            counts.astype(np.uint16) << field_shifts, axis=1, initial=0
        ).astype(np.uint16)
    top = (1 << scheme.p) - 1
    first = np.full((rows, slots + 1), top, dtype=np.uint16)
    flat = first.reshape(-1)
    for col in range(min(length, top) - 1, -1, -1):
        flat[row_base[:, 0] + ids[:, col]] = col
    npos = scheme.position_slots
    fp = np.bitwise_or.reduce(
        first[:, :npos] << field_shifts[:npos], axis=1, initial=0
    ).astype(np.uint16)
    if slots > npos:
        masks = np.array(scheme._occurrence_masks, dtype=np.uint16)
        fp |= np.bitwise_or.reduce(masks[block], axis=1, initial=0)
    return fp


def _field_mismatch_table(widths: Iterable[int]) -> np.ndarray:
    """Number of nonzero fields in every 16-bit value, for a field layout."""
    x = np.arange(_SPACE, dtype=np.uint32)
    total = np.zeros(_SPACE, dtype=np.uint8)
    shift = WIDTH
    for w in widths:
        shift -= w
        total += ((x >> shift) & ((1 << w) - 1)) != 0
    return total


@dataclass(frozen=True)
class ComparisonTables:
    """Lookup tables for comparing fingerprints of one scheme.

    ``distance[x]`` is the fingerprint distance for an xor value ``x`` and
    ``lower_bound[x]`` is ``ceil(distance[x] / 2)``; the latter lets the
    scan loop reject a word with a single lookup.
    """

    scheme: Scheme
    popcount16: list[int]
    ceil_half: list[int]
    field_mismatch: list[int] | None
    distance: list[int]
    lower_bound: list[int]

    @property
    def pgram_mismatch(self) -> list[int] | None:
        return self.field_mismatch if self.scheme.variant is Variant.POSITION else None

    @classmethod
    def build(cls, scheme: Scheme) -> ComparisonTables:
        bits = np.unpackbits(np.arange(_SPACE, dtype=">u2").view(np.uint8))
        popcount = bits.reshape(_SPACE, WIDTH).sum(axis=1, dtype=np.uint8)
        ceil_half = [(d + 1) // 2 for d in range(WIDTH + 1)]
        if scheme.variant in (Variant.COUNT, Variant.POSITION):
            mismatch = _field_mismatch_table(scheme.field_widths())
            distance = mismatch
        else:
            mismatch = None
            distance = popcount
        lower_bound = np.asarray(ceil_half, dtype=np.uint8)[distance]
        return cls(
            scheme=scheme,
            popcount16=popcount.tolist(),
            ceil_half=ceil_half,
            field_mismatch=None if mismatch is None else mismatch.tolist(),
            distance=distance.tolist(),
            lower_bound=lower_bound.tolist(),
        )


def fingerprint_distance(f1: int, f2: int, tables: ComparisonTables) -> int:
    return tables.distance[f1 ^ f2]


def lower_bound_errors(fd: int, tables: ComparisonTables) -> int:
    """Least number of edits consistent with fingerprint distance ``fd``."""
    return tables.ceil_half[fd]


def can_reject(f1: int, f2: int, k: int, tables: ComparisonTables) -> bool:
    """True if the fingerprints alone prove the words are more than ``k`` apart."""
    return tables.lower_bound[f1 ^ f2] > k


def render(fp: int, scheme: Scheme) -> str:
    """Bit string of ``fp`` with slot 0 leftmost.

    Occurrence fingerprints print as one run of 16 bits; other variants
    separate their fields with spaces.
    """
    bits = format(fp, f"0{WIDTH}b")
    if scheme.variant is Variant.OCCURRENCE:
        return bits
    fields, start = [], 0
    widths = scheme.field_widths()
    if scheme.variant is Variant.POSITION:
        # leftover occurrence bits print as one trailing group
        tail = len(widths) - scheme.position_slots
        widths = widths[: scheme.position_slots] + ([tail] if tail else [])
    for w in widths:
        fields.append(bits[start : start + w])
        start += w
    return " ".join(fields)
