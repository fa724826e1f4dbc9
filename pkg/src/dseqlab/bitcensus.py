"""Counts of 0 and 1 bits over the binary representations of primes.

A row for width w covers every prime p <= 2^w - 1. In constant mode each
prime is padded to exactly w bits; in variable mode it is written in its
minimal length. Counting uses popcounts on the sieve output, never strings.
"""
from __future__ import annotations

import enum
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import CapacityError, DomainError
from .primes import PrimeRange, iter_prime_segments

MAX_WIDTH = 32


class BitMode(enum.Enum):
    CONSTANT = "constant"
    VARIABLE = "variable"


@dataclass(frozen=True)
class BitCensusRow:
    width: int
    zeros: int
    ones: int
    total: int

    @property
    def ones_fraction(self) -> float:
        return self.ones / self.total if self.total else float("nan")


@dataclass(frozen=True)
class _Tally:
    # per bit length L (index L): prime count and total popcount
    count: np.ndarray
    ones: np.ndarray

    def __add__(self, other: _Tally) -> _Tally:
        return _Tally(self.count + other.count, self.ones + other.ones)


def _check_width(width: int, low: int = 1) -> None:
    if width < low:
        raise DomainError(f"width must be >= {low}, got {width}")
    if width > MAX_WIDTH:
        raise CapacityError(f"width {width} exceeds the {MAX_WIDTH}-bit ceiling")


def _tally_primes(primes: np.ndarray, max_width: int) -> _Tally:
    edges = 1 << np.arange(max_width + 1, dtype=np.int64)  # 2^0 .. 2^w
    # split points between bit lengths: primes < 2^L have length <= L
    cuts = np.searchsorted(primes, edges, side="left")
    pop = np.bitwise_count(primes.astype(np.uint64)).astype(np.int64)
    csum = np.concatenate(([0], np.cumsum(pop)))
    count = np.zeros(max_width + 1, dtype=np.int64)
    ones = np.zeros(max_width + 1, dtype=np.int64)
    count[1:] = np.diff(cuts)
    ones[1:] = np.diff(csum[cuts])
    return _Tally(count, ones)


def _tally(max_width: int, threads: int = 1, min_width: int = 1) -> _Tally:
    """Bit-length histogram over the primes with min_width <= bitlength <= max_width.

    The prime range is partitioned into sieve segments merged by addition,
    so the result is the same for any number of worker threads.
    """
    total = _Tally(np.zeros(max_width + 1, np.int64), np.zeros(max_width + 1, np.int64))
    lo, hi = max(2, 1 << (min_width - 1)), (1 << max_width) - 1
    if hi < lo:
        return total
    segments = iter_prime_segments(PrimeRange(lo, hi))
    if threads <= 1:
        for seg in segments:
            total = total + _tally_primes(seg, max_width)
        return total
    with ThreadPoolExecutor(max_workers=threads) as pool:
        pending: deque = deque()
        for seg in segments:
            pending.append(pool.submit(_tally_primes, seg, max_width))
            if len(pending) >= 2 * threads:  # bound the segments held in memory
                total = total + pending.popleft().result()
        while pending:
            total = total + pending.popleft().result()
    return total


def _row(t: _Tally, width: int, mode: BitMode) -> BitCensusRow:
    lengths = np.arange(width + 1, dtype=np.int64)
    n = int(t.count[: width + 1].sum())
    ones = int(t.ones[: width + 1].sum())
    if mode is BitMode.CONSTANT:
        total = width * n
    else:
        total = int((lengths * t.count[: width + 1]).sum())
    return BitCensusRow(width, total - ones, ones, total)


def constant_bit_census(width: int, threads: int = 1) -> BitCensusRow:
    """Zeros and ones over all primes <= 2^width - 1, each padded to ``width`` bits.

    >>> constant_bit_census(3)
    BitCensusRow(width=3, zeros=4, ones=8, total=12)
    """
    _check_width(width)
    return _row(_tally(width, threads), width, BitMode.CONSTANT)


def variable_bit_census(width: int, threads: int = 1) -> BitCensusRow:
    """Same prime set as the constant census, without leading zeros."""
    _check_width(width)
    return _row(_tally(width, threads), width, BitMode.VARIABLE)


def bit_census(width: int, mode="constant", threads: int = 1) -> BitCensusRow:
    mode = BitMode(mode)
    if mode is BitMode.CONSTANT:
        return constant_bit_census(width, threads)
    return variable_bit_census(width, threads)


def iter_bit_census_rows(max_width: int, mode="constant", min_width: int = 1, threads: int = 1) -> Iterator[BitCensusRow]:
    """Rows min_width..max_width, sieving each bit-length band exactly once."""
    _check_width(max_width)
    _check_width(min_width)
    mode = BitMode(mode)
    t = _tally(min_width, threads)
    yield _row(t, min_width, mode)
    for w in range(min_width + 1, max_width + 1):
        band = _tally(w, threads, min_width=w)
        t = _Tally(np.append(t.count, 0), np.append(t.ones, 0)) + band
        yield _row(t, w, mode)


def bit_census_table(max_width: int, mode="constant", min_width: int = 1, threads: int = 1) -> list[BitCensusRow]:
    return list(iter_bit_census_rows(max_width, mode, min_width, threads))


def ones_fraction_series(max_width: int, threads: int = 1) -> list[tuple[int, float]]:
    """(width, ones / (zeros + ones)) for widths 2..max_width, constant mode."""
    _check_width(max_width, low=2)
    return [(r.width, r.ones_fraction) for r in bit_census_table(max_width, min_width=2, threads=threads)]
