import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dseqlab.errors import CapacityError, DomainError
from dseqlab.primes import (
    PrimeRange,
    count_primes,
    is_prime,
    iter_prime_segments,
    next_prime,
    prev_prime,
    primes_in_range,
    sieve_upto,
)
from oracles import trial_division_is_prime, trial_division_primes


def test_sieve_small():
    assert sieve_upto(0) == []
    assert sieve_upto(1) == []
    assert sieve_upto(2) == [2]
    assert sieve_upto(10) == [2, 3, 5, 7]


def test_sieve_count_to_a_million():
    # frozen from a single trial-division enumeration (about 10 s, too slow to repeat)
    assert len(sieve_upto(10**6)) == 78498


def test_sieve_matches_trial_division_to_1e5():
    expected = trial_division_primes(10**5)
    for limit in (2, 3, 4, 97, 100, 1000, 4093, 65536, 10**5):
        assert sieve_upto(limit) == [p for p in expected if p <= limit]


def test_sieve_ceiling():
    with pytest.raises(CapacityError):
        sieve_upto(2**32 + 1)
    with pytest.raises(DomainError):
        sieve_upto(-1)


@pytest.mark.parametrize("lo,hi", [(5, 4), (-1, 3)])
def test_range_rejects_bad_bounds(lo, hi):
    with pytest.raises(DomainError):
        PrimeRange(lo, hi)


def test_range_ceiling():
    PrimeRange(0, 2**40 - 1)
    with pytest.raises(CapacityError):
        PrimeRange(0, 2**40)


def test_primes_in_gap():
    assert primes_in_range(PrimeRange(14, 16)) == []
    assert primes_in_range((16, 16)) == []


def test_census_range_count():
    assert count_primes(PrimeRange(800011, 999983)) == 14547
    ps = primes_in_range(PrimeRange(800011, 999983))
    assert ps[0] == 800011 and ps[-1] == 999983


def test_window_contains_listed_primes():
    ps = primes_in_range(PrimeRange(970270, 970400))
    assert ps == [970279, 970297, 970303, 970313, 970351, 970391]


def test_near_ceiling_range():
    lo = 2**40 - 2000
    got = primes_in_range(PrimeRange(lo, 2**40 - 1))
    assert got == [n for n in range(lo, 2**40) if is_prime(n)]
    assert got  # there are primes in any window of that size


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30000), st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([1, 7, 64, 1 << 20]))
def test_segmentation_transparency(lo, a, b, seg):
    mid, hi = lo + a, lo + a + b + 1
    whole = primes_in_range(PrimeRange(lo, hi), segment_size=seg)
    left = primes_in_range(PrimeRange(lo, mid), segment_size=seg)
    right = primes_in_range(PrimeRange(mid + 1, hi))
    assert left + right == whole
    assert whole == [p for p in sieve_upto(hi) if p >= lo]


def test_segments_are_ascending_int64():
    segs = list(iter_prime_segments(PrimeRange(0, 5000), segment_size=100))
    flat = np.concatenate(segs)
    assert flat.dtype == np.int64
    assert np.all(np.diff(flat) > 0)
    assert all(is_prime(int(p)) for p in flat)


@pytest.mark.parametrize(
    "n,expected",
    [(0, False), (1, False), (2, True), (4, False), (989663, True), (10**6 + 3, True),
     (2**61 - 1, True), (2**62 + 135, True), (3215031751, False), (3825123056546413051, False),
     (2**63 - 25, True), (1000000007 * 998244353, False)],
)
def test_is_prime_known(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize(
    "n", [2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051]
)
def test_is_prime_rejects_strong_pseudoprimes(n):
    # each fools every witness stage below it
    assert not is_prime(n)


def test_is_prime_matches_trial_division():
    assert [n for n in range(5000) if is_prime(n)] == trial_division_primes(4999)
    assert is_prime(10**6 + 3) == trial_division_is_prime(10**6 + 3)


def test_next_prev():
    assert next_prime(970391) == 970421
    assert prev_prime(970279) == 970267
    assert prev_prime(2) is None
