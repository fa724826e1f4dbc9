"""Prime generation: plain and segmented sieves, deterministic primality test.

Every stream here includes 2. Arrays are int64 and read-only, so they can be
shared between worker threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator

import numpy as np

from .errors import CapacityError, DomainError

RANGE_CEILING = 2**40
PLAIN_SIEVE_CEILING = 2**32
DEFAULT_SEGMENT = 2**20  # odd numbers per segment

_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# (bound, witnesses): Miller-Rabin with these bases is exact for n < bound.
_MR_STAGES = (
    (2047, _SMALL[:1]),
    (1373653, _SMALL[:2]),
    (25326001, _SMALL[:3]),
    (3215031751, _SMALL[:4]),
    (3474749660383, _SMALL[:6]),
    (341550071728321, _SMALL[:7]),
    (3825123056546413051, _SMALL[:9]),
    (318665857834031151167461, _SMALL),
)


@dataclass(frozen=True)
class PrimeRange:
    """Inclusive interval [lo, hi] of naturals to search for primes."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0 or self.hi < 0:
            raise DomainError(f"range bounds must be non-negative, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise DomainError(f"empty range: lo={self.lo} > hi={self.hi}")
        if self.hi >= RANGE_CEILING:
            raise CapacityError(f"hi={self.hi} is above the 2^40 operating ceiling")

    def split(self, mid: int) -> tuple[PrimeRange, PrimeRange]:
        """Split into [lo, mid] and [mid+1, hi]."""
        if not self.lo <= mid < self.hi:
            raise DomainError(f"split point {mid} outside [{self.lo}, {self.hi})")
        return PrimeRange(self.lo, mid), PrimeRange(mid + 1, self.hi)


def _as_range(rng) -> PrimeRange:
    if isinstance(rng, PrimeRange):
        return rng
    lo, hi = rng
    return PrimeRange(int(lo), int(hi))


@lru_cache(maxsize=8)
def _base_primes(bound: int) -> np.ndarray:
    # bound is always a power of two (see small_primes), keeping the cache tiny
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, isqrt(bound) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    out = np.flatnonzero(flags).astype(np.int64)
    out.flags.writeable = False
    return out


def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit from a single plain sieve (limit should be modest)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    bound = 1 << max(limit - 1, 1).bit_length()
    base = _base_primes(bound)
    return base[: np.searchsorted(base, limit, side="right")]


def iter_prime_segments(rng, segment_size: int = DEFAULT_SEGMENT) -> Iterator[np.ndarray]:
    """Yield ascending int64 arrays of the primes in ``rng``, one per segment.

    Only odd candidates are stored, so a segment of ``segment_size`` entries
    spans ``2 * segment_size`` integers. Memory stays bounded no matter how
    large ``hi`` is.
    """
    rng = _as_range(rng)
    if segment_size < 1:
        raise DomainError("segment_size must be positive")
    lo, hi = rng.lo, rng.hi
    if lo <= 2 <= hi:
        yield np.array([2], dtype=np.int64)
    start = max(lo, 3) | 1
    if start > hi:
        return
    base = small_primes(isqrt(hi))[1:].tolist()
    while start <= hi:
        n = min(segment_size, (hi - start) // 2 + 1)
        end = start + 2 * (n - 1)
        flags = np.ones(n, dtype=bool)
        root = isqrt(end)
        for p in base:
            if p > root:
                break
            m = max(p * p, -(-start // p) * p)
            if not m & 1:
                m += p
            if m <= end:
                flags[(m - start) // 2 :: p] = False
        yield start + 2 * np.flatnonzero(flags).astype(np.int64)
        start = end + 2


def prime_array(rng, segment_size: int = DEFAULT_SEGMENT) -> np.ndarray:
    """Primes in ``rng`` as one int64 array."""
    parts = list(iter_prime_segments(rng, segment_size))
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def count_primes(rng, segment_size: int = DEFAULT_SEGMENT) -> int:
    return sum(len(seg) for seg in iter_prime_segments(rng, segment_size))


def sieve_upto(limit: int) -> list[int]:
    """Ascending list of all primes <= ``limit``.

    >>> sieve_upto(10)
    [2, 3, 5, 7]
    """
    if limit < 0:
        raise DomainError(f"limit must be non-negative, got {limit}")
    if limit > PLAIN_SIEVE_CEILING:
        raise CapacityError(f"limit {limit} exceeds 2^32; use primes_in_range")
    if limit < 2:
        return []
    return prime_array(PrimeRange(0, limit)).tolist()


def primes_in_range(rng, segment_size: int = DEFAULT_SEGMENT) -> list[int]:
    """Ascending list of the primes p with lo <= p <= hi (both ends inclusive)."""
    return prime_array(rng, segment_size).tolist()


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all 64-bit inputs (and up to 3.1e23)."""
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    witnesses = next((w for bound, w in _MR_STAGES if n < bound), None)
    if witnesses is None:
        raise CapacityError(f"{n} is beyond the deterministic witness table")
    d = n - 1
    s = 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def prev_prime(n: int) -> int | None:
    """Largest prime strictly less than n, or None below 3."""
    c = n - 1
    while c >= 2:
        if is_prime(c):
            return c
        c -= 1
    return None
