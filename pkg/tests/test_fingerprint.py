import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wordprint.fingerprint import (
    ComparisonTables,
    Scheme,
    Variant,
    build,
    build_count,
    build_many,
    build_occurrence,
    build_occurrence_halved,
    build_position,
    can_reject,
    fingerprint_distance,
    lower_bound_errors,
    render,
)
from wordprint.letters import LetterSet
from wordprint.oracles import fingerprint_distance_reference, hamming_full

from conftest import english_scheme

GOLDEN = {
    "occurrence": "1110111000010000",
    "halved": "01 10 01 00 10 11 10 00",
    "count": "01 01 01 00 01 10 01 00",
    "position": "111 011 100 111 000 1",
}


@pytest.mark.parametrize("variant", GOLDEN)
def test_instance_golden(variant):
    scheme = english_scheme(variant)
    assert render(build(b"instance", scheme), scheme) == GOLDEN[variant]


def test_variant_builders_match_dispatch(scheme):
    specific = {
        Variant.OCCURRENCE: build_occurrence,
        Variant.OCCURRENCE_HALVED: build_occurrence_halved,
        Variant.COUNT: build_count,
        Variant.POSITION: build_position,
    }[scheme.variant]
    assert specific(b"instance", scheme) == build(b"instance", scheme)
    assert build(b"instance", scheme) == build(b"instance", scheme)


def test_empty_string(scheme):
    fp = build(b"", scheme)
    if scheme.variant is Variant.POSITION:
        assert render(fp, scheme) == "111 111 111 111 111 0"
    else:
        assert fp == 0


def test_halved_single_symbol_goes_to_second_half():
    scheme = english_scheme("halved")
    assert render(build(b"e", scheme), scheme) == "01 00 00 00 00 00 00 00"


def test_count_saturates():
    scheme = english_scheme("count")
    assert render(build(b"eeee", scheme), scheme).split()[0] == "11"
    assert render(build(b"eee", scheme), scheme).split()[0] == "11"
    assert render(build(b"ee", scheme), scheme).split()[0] == "10"


def test_position_first_symbol_and_absent_letter():
    scheme = english_scheme("position")
    fields = render(build(b"e" + b"z" * 19, scheme), scheme).split()
    assert fields[0] == "000"
    assert fields[3] == "111"  # 'o'
    assert fields[5] == "0"


def test_position_far_occurrence_saturates():
    scheme = english_scheme("position")
    assert render(build(b"zzzzzze", scheme), scheme).split()[0] == "110"
    assert render(build(b"zzzzzzze", scheme), scheme).split()[0] == "111"
    assert render(build(b"zzzzzzzzzze", scheme), scheme).split()[0] == "111"


def test_occurrence_membership_random():
    scheme = english_scheme("occurrence", letters=b"abcdefghijklmnop")
    rng = random.Random(7)
    for _ in range(500):
        s = bytes(rng.choice(b"abc") for _ in range(rng.randrange(0, 8)))
        fp = build(s, scheme)
        for q, c in enumerate(b"abc"):
            assert bool(fp >> (15 - q) & 1) == (c in s)


def test_count_random_against_counting_scan():
    scheme = english_scheme("count", letters=b"abcdefgh")
    rng = random.Random(11)
    for _ in range(500):
        s = bytes(rng.choice(b"abcxyz") for _ in range(rng.randrange(0, 12)))
        fields = render(build(s, scheme), scheme).split()
        for q, c in enumerate(b"abcdefgh"):
            assert int(fields[q], 2) == min(s.count(c), 3)


def test_count_other_widths():
    letters = LetterSet(b"ab")
    scheme = Scheme(Variant.COUNT, letters, b=8)
    assert build(b"a" * 300 + b"b" * 5, scheme) == (255 << 8) | 5
    with pytest.raises(ValueError):
        Scheme(Variant.COUNT, LetterSet(b"abcde"), b=3)


def test_position_other_widths():
    # p = 4: four 4-bit fields, no leftover bits
    scheme = Scheme(Variant.POSITION, LetterSet(b"abcd"), p=4)
    assert render(build(b"xxbxa", scheme), scheme) == "0100 0010 1111 1111"
    assert Scheme.capacity("position", p=5) == 4


def test_scheme_rejects_wrong_letter_count():
    with pytest.raises(ValueError):
        Scheme(Variant.OCCURRENCE, LetterSet(b"abc"))


def test_metric_support():
    from wordprint.distances import Metric

    both = {Metric.HAMMING, Metric.LEVENSHTEIN}
    assert english_scheme("occurrence").metric_support == both
    assert english_scheme("count").metric_support == both
    assert english_scheme("halved").metric_support == {Metric.HAMMING}
    assert english_scheme("position").metric_support == {Metric.HAMMING}


words = st.binary(max_size=20) | st.text("etaoinshrdlz", max_size=20).map(str.encode)


@given(st.lists(words, max_size=30))
def test_build_many_matches_scalar(ws):
    for variant in Variant:
        scheme = english_scheme(variant)
        assert build_many(ws, scheme).tolist() == [build(w, scheme) for w in ws]


def test_run_ran_distance():
    scheme = english_scheme("occurrence")
    tables = ComparisonTables.build(scheme)
    run, ran = build(b"run", scheme), build(b"ran", scheme)
    fd = fingerprint_distance(run, ran, tables)
    assert fd == 2
    assert lower_bound_errors(fd, tables) == 1 <= hamming_full(b"run", b"ran")
    assert not can_reject(run, ran, 1, tables)


def test_identical_fingerprints(scheme, tables):
    fp = build(b"instance", scheme)
    assert fingerprint_distance(fp, fp, tables) == 0
    assert not can_reject(fp, fp, 1, tables)


def test_count_three_versus_one_is_one():
    scheme = english_scheme("count")
    tables = ComparisonTables.build(scheme)
    assert fingerprint_distance(build(b"eee", scheme), build(b"e", scheme), tables) == 1


def test_count_bitwise_popcount_would_overreject():
    # "ett" -> "eet" is one substitution, but the 2-bit counters of e and t
    # flip 01<->10, so a plain popcount of the xor would report 4.
    scheme = english_scheme("count")
    tables = ComparisonTables.build(scheme)
    a, b = build(b"ett", scheme), build(b"eet", scheme)
    assert tables.popcount16[a ^ b] == 4
    assert fingerprint_distance(a, b, tables) == 2
    assert lower_bound_errors(2, tables) <= hamming_full(b"ett", b"eet")


@pytest.mark.parametrize("fd, bound", [(0, 0), (1, 1), (2, 1), (3, 2), (16, 8)])
def test_lower_bound(fd, bound):
    tables = ComparisonTables.build(english_scheme("occurrence"))
    assert lower_bound_errors(fd, tables) == bound


def test_can_reject_thresholds():
    scheme = english_scheme("occurrence")
    tables = ComparisonTables.build(scheme)
    assert not can_reject(0b11, 0, 1, tables)  # fd 2
    assert can_reject(0b111, 0, 1, tables)  # fd 3
    assert not can_reject(0b111, 0, 2, tables)


def test_tables_entry_by_entry(scheme, tables):
    assert tables.popcount16 == [bin(x).count("1") for x in range(1 << 16)]
    assert tables.ceil_half == [-(-d // 2) for d in range(17)]
    for x in range(1 << 16):
        assert tables.distance[x] == fingerprint_distance_reference(x, 0, scheme)
        assert tables.lower_bound[x] == tables.ceil_half[tables.distance[x]]
    if scheme.variant is Variant.POSITION:
        assert max(tables.pgram_mismatch) == 16 // 3 + 1
    else:
        assert tables.pgram_mismatch is None


def test_position_reference_example():
    scheme = english_scheme("position")
    # fields 0 and 2 differ, leftover bit differs
    f1 = int("000" "000" "000" "000" "000" "0", 2)
    f2 = int("101" "000" "001" "000" "000" "1", 2)
    assert fingerprint_distance_reference(f1, f2, scheme) == 3
    assert fingerprint_distance_reference(0b11111, 0, english_scheme("occurrence")) == 5


fps = st.integers(0, (1 << 16) - 1)


@settings(max_examples=300)
@given(fps, fps, fps)
def test_fingerprint_distance_is_a_metric(x, y, z):
    for variant in Variant:
        scheme = english_scheme(variant)
        tables = ComparisonTables.build(scheme) if variant not in _TABLES else _TABLES[variant]
        _TABLES[variant] = tables
        d = lambda a, b: fingerprint_distance(a, b, tables)  # noqa: E731
        assert d(x, x) == 0
        assert d(x, y) == d(y, x)
        assert d(x, z) <= d(x, y) + d(y, z)
        assert 0 <= d(x, y) <= 16
        assert d(x, y) == fingerprint_distance_reference(x, y, scheme)


_TABLES: dict = {}


def test_batch_fingerprints_dtype():
    out = build_many([b"abc", b"", b"instance"], english_scheme("count"))
    assert out.dtype == np.uint16
