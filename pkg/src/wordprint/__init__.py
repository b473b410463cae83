"""Lightweight 16-bit fingerprints for approximate dictionary matching."""

from .distances import LengthMismatchError, Metric, hamming_bounded, levenshtein_bounded
from .fingerprint import (
    ComparisonTables,
    Scheme,
    Variant,
    build,
    build_many,
    can_reject,
    fingerprint_distance,
    lower_bound_errors,
    render,
)
from .index import FingerprintedDictionary, QueryStats, build_dictionary, query
from .letters import LetterSet, Strategy, SymbolFrequencyTable, compute_frequencies, select_letters

__version__ = "0.1.0"
