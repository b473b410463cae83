import itertools
import random

import pytest
from hypothesis import given, strategies as st

from wordprint.distances import LengthMismatchError, hamming_bounded, levenshtein_bounded
from wordprint.oracles import hamming_full, levenshtein_full


def all_strings(alphabet, max_len):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield bytes(t)


@pytest.mark.parametrize(
    "s1, s2, k, expected",
    [(b"run", b"ran", 1, 1), (b"abc", b"abc", 0, 0), (b"abcd", b"wxyz", 2, None)],
)
def test_hamming_examples(s1, s2, k, expected):
    assert hamming_bounded(s1, s2, k) == expected


def test_hamming_length_mismatch_is_an_error():
    with pytest.raises(LengthMismatchError):
        hamming_bounded(b"ab", b"abc", 5)
    with pytest.raises(LengthMismatchError):
        hamming_full(b"ab", b"abc")


@pytest.mark.parametrize(
    "s1, s2, k, expected",
    [
        (b"instance", b"instance", 1, 0),
        (b"abc", b"ab", 1, 1),
        (b"kitten", b"sitting", 3, 3),
        (b"kitten", b"sitting", 2, None),
        (b"", b"", 0, 0),
        (b"", b"abc", 3, 3),
        (b"abc", b"abd", 0, None),
    ],
)
def test_levenshtein_examples(s1, s2, k, expected):
    assert levenshtein_bounded(s1, s2, k) == expected


def test_kitten_sitting_oracle():
    assert levenshtein_full(b"kitten", b"sitting") == 3


def test_hamming_exhaustive():
    strings = list(all_strings(b"abc", 6))
    by_len = {}
    for s in strings:
        by_len.setdefault(len(s), []).append(s)
    rng = random.Random(0)
    for n, group in by_len.items():
        pairs = itertools.product(group, repeat=2) if n <= 4 else (
            (rng.choice(group), rng.choice(group)) for _ in range(3000)
        )
        for a, b in pairs:
            d = hamming_full(a, b)
            for k in range(4):
                assert hamming_bounded(a, b, k) == (d if d <= k else None)


def test_levenshtein_exhaustive():
    strings = list(all_strings(b"abc", 4))
    for a, b in itertools.product(strings, repeat=2):
        d = levenshtein_full(a, b)
        for k in range(4):
            assert levenshtein_bounded(a, b, k) == (d if d <= k else None), (a, b, k)


def test_levenshtein_random_long_pairs():
    rng = random.Random(5)
    for _ in range(300):
        a = bytes(rng.choice(b"acgt") for _ in range(rng.randrange(20, 60)))
        b = bytearray(a)
        for _ in range(rng.randrange(0, 8)):
            op = rng.randrange(3)
            pos = rng.randrange(len(b) + 1)
            if op == 0 and pos < len(b):
                b[pos] = rng.choice(b"acgt")
            elif op == 1:
                b.insert(pos, rng.choice(b"acgt"))
            elif pos < len(b):
                del b[pos]
        d = levenshtein_full(a, bytes(b))
        for k in (0, 1, 3, 6, 10):
            assert levenshtein_bounded(a, bytes(b), k) == (d if d <= k else None)


short = st.binary(max_size=12) | st.text("ab", max_size=12).map(str.encode)


@given(short, short, st.integers(0, 6))
def test_levenshtein_symmetric_and_length_gap(a, b, k):
    assert levenshtein_bounded(a, b, k) == levenshtein_bounded(b, a, k)
    if abs(len(a) - len(b)) > k:
        assert levenshtein_bounded(a, b, k) is None


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(
    st.binary(min_size=n, max_size=n), st.binary(min_size=n, max_size=n))),
    st.integers(0, 4))
def test_hamming_symmetric(pair, k):
    a, b = pair
    assert hamming_bounded(a, b, k) == hamming_bounded(b, a, k)


@given(short, short, short)
def test_levenshtein_full_is_a_metric(a, b, c):
    assert levenshtein_full(a, a) == 0
    assert (levenshtein_full(a, b) == 0) == (a == b)
    assert levenshtein_full(a, b) == levenshtein_full(b, a)
    assert levenshtein_full(a, c) <= levenshtein_full(a, b) + levenshtein_full(b, c)


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(
    st.text("abc", min_size=n, max_size=n), st.text("abc", min_size=n, max_size=n))))
def test_hamming_dominates_levenshtein(pair):
    a, b = (s.encode() for s in pair)
    assert hamming_full(a, b) >= levenshtein_full(a, b)


def test_oracle_examples():
    assert levenshtein_full(b"", b"abc") == 3
    assert levenshtein_full(b"instance", b"instance") == 0
    assert levenshtein_full(b"run", b"ran") == 1
    assert hamming_full(b"run", b"ran") == 1
    assert hamming_full(b"aaaa", b"aaaa") == 0
    assert hamming_full(b"ab", b"ba") == 2
