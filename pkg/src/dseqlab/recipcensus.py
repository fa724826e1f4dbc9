"""Range-level statistics over prime reciprocals.

The work is split into chunks of consecutive primes. Each chunk produces
plain integer counters and the counters are summed, so every result is
independent of chunking and of the number of worker threads.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Callable, Iterable, Sequence

import numpy as np

from .dseq import DigitRule, period_digit_counts
from .errors import BudgetExceeded, DomainError
from .modarith import DEFAULT_SEED, multiplicative_order
from .primes import PrimeRange, _as_range, prime_array

DEFAULT_CHUNK = 256

Progress = Callable[[int, int], None]


@dataclass(frozen=True)
class RangeCensus:
    range: PrimeRange
    base: int
    prime_count: int = 0
    zeros_exceed: int = 0
    ones_exceed: int = 0
    equal: int = 0
    max_length_count: int = 0
    excluded: int = 0

    def __add__(self, other: RangeCensus) -> RangeCensus:
        """Merge censuses of two adjacent ranges."""
        if self.base != other.base:
            raise DomainError("cannot merge censuses in different bases")
        a, b = sorted((self.range, other.range), key=lambda r: r.lo)
        if a.hi + 1 != b.lo:
            raise DomainError(f"ranges [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] are not adjacent")
        counters = {
            f.name: getattr(self, f.name) + getattr(other, f.name)
            for f in fields(self)
            if f.name not in ("range", "base")
        }
        return RangeCensus(PrimeRange(a.lo, b.hi), self.base, **counters)

    @property
    def ratio(self) -> float:
        """zeros_exceed / ones_exceed (inf when no prime has excess ones)."""
        if self.ones_exceed == 0:
            return float("inf") if self.zeros_exceed else float("nan")
        return self.zeros_exceed / self.ones_exceed


@dataclass(frozen=True)
class NonMaxRun:
    start_prime: int
    end_prime: int
    length: int
    boundary_truncated: bool


@dataclass(frozen=True)
class DigitTotals:
    range: PrimeRange
    base: int
    rule: DigitRule
    totals: tuple[int, ...]
    excluded: int


def _chunks(arr: np.ndarray, size: int) -> list[np.ndarray]:
    if size < 1:
        raise DomainError("chunk size must be positive")
    return [arr[i : i + size] for i in range(0, len(arr), size)]


def _run_chunks(
    func,
    chunks: Sequence[np.ndarray],
    threads: int,
    progress: Progress | None,
    deadline: float | None,
) -> Iterable:
    """Apply ``func`` to every chunk, yielding results in chunk order."""
    total = sum(len(c) for c in chunks)
    done = 0

    def tick(n):
        nonlocal done
        done += n
        if progress is not None:
            progress(done, total)
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"budget exhausted after {done} of {total} primes")

    if threads <= 1:
        for c in chunks:
            res = func(c)
            tick(len(c))
            yield res
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(func, c) for c in chunks]
        try:
            for c, fut in zip(chunks, futures):
                res = fut.result()
                tick(len(c))
                yield res
        finally:
            for fut in futures:
                fut.cancel()


def _deadline(budget: float | None) -> float | None:
    return None if budget is None else time.monotonic() + budget


def imbalance_census(
    rng,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    seed: int = DEFAULT_SEED,
    progress: Progress | None = None,
    budget: float | None = None,
) -> RangeCensus:
    """Classify each prime's base-2 reciprocal by which digit dominates one period.

    Examples
    --------
    >>> imbalance_census((14, 16))
    RangeCensus(range=PrimeRange(lo=14, hi=16), base=2, prime_count=0, zeros_exceed=0, ones_exceed=0, equal=0, max_length_count=0, excluded=0)
    """
    rng = _as_range(rng)
    primes = prime_array(rng)

    def work(chunk):
        z = o = e = m = x = 0
        for p in chunk.tolist():
            if p == 2:
                x += 1
                continue
            t = multiplicative_order(2, p, seed)
            counts = period_digit_counts(p, 2, t, DigitRule.EXPANSION)
            zeros, ones = int(counts[0]), int(counts[1])
            if zeros > ones:
                z += 1
            elif ones > zeros:
                o += 1
            else:
                e += 1
            m += t == p - 1
        return np.array([z, o, e, m, x], dtype=np.int64)

    acc = np.zeros(5, dtype=np.int64)
    for part in _run_chunks(work, _chunks(primes, chunk_size), threads, progress, _deadline(budget)):
        acc += part
    z, o, e, m, x = (int(v) for v in acc)
    return RangeCensus(rng, 2, len(primes), z, o, e, m, x)


def digit_totals(
    rng,
    base: int = 10,
    rule=DigitRule.EXPANSION,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    seed: int = DEFAULT_SEED,
    progress: Progress | None = None,
    budget: float | None = None,
) -> DigitTotals:
    """Per-digit totals over one full period of every prime in range not dividing base."""
    rng = _as_range(rng)
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    rule = DigitRule.parse(rule)
    primes = prime_array(rng)

    def work(chunk):
        acc = np.zeros(base + 1, dtype=np.int64)  # last slot counts exclusions
        for p in chunk.tolist():
            if base % p == 0:
                acc[base] += 1
                continue
            t = multiplicative_order(base, p, seed)
            acc[:base] += period_digit_counts(p, base, t, rule)
        return acc

    acc = np.zeros(base + 1, dtype=np.int64)
    for part in _run_chunks(work, _chunks(primes, chunk_size), threads, progress, _deadline(budget)):
        acc += part
    return DigitTotals(rng, base, rule, tuple(int(v) for v in acc[:base]), int(acc[base]))


class RunCriterion(enum.Enum):
    """What makes a prime break a run.

    ``ORDER``: the prime is maximum length (period p - 1).
    ``ODD_PERIOD``: the period is even, i.e. the second half of the period
    complements the first. In base 2 the runs then consist of exactly the
    primes whose reciprocals have unequal 0 and 1 counts.
    """

    ORDER = "order"
    ODD_PERIOD = "odd-period"


def max_length_flags(
    primes: np.ndarray,
    base: int,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    seed: int = DEFAULT_SEED,
    progress: Progress | None = None,
    budget: float | None = None,
    criterion=RunCriterion.ORDER,
) -> np.ndarray:
    """Per prime: 1 if it breaks a run, 0 if it extends one, -1 if it divides the base."""
    criterion = RunCriterion(criterion)

    def work(chunk):
        out = np.empty(len(chunk), dtype=np.int8)
        for i, p in enumerate(chunk.tolist()):
            if base % p == 0:
                out[i] = -1
                continue
            t = multiplicative_order(base, p, seed)
            if criterion is RunCriterion.ORDER:
                out[i] = t == p - 1
            else:
                out[i] = t % 2 == 0
        return out

    parts = list(_run_chunks(work, _chunks(primes, chunk_size), threads, progress, _deadline(budget)))
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int8)


def find_nonmax_runs(
    rng,
    base: int = 2,
    min_length: int = 1,
    threads: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    seed: int = DEFAULT_SEED,
    progress: Progress | None = None,
    budget: float | None = None,
    criterion=RunCriterion.ORDER,
) -> list[NonMaxRun]:
    """Maximal runs of consecutive primes whose reciprocals are not maximum length.

    A run that contains the first or last prime of the range may continue
    outside it and is flagged ``boundary_truncated``. Primes dividing the
    base end a run without joining one. See ``RunCriterion`` for the
    alternative odd-period reading.
    """
    rng = _as_range(rng)
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if min_length < 1:
        raise DomainError(f"min_length must be >= 1, got {min_length}")
    primes = prime_array(rng)
    flags = max_length_flags(primes, base, threads, chunk_size, seed, progress, budget, criterion)
    runs = []
    n = len(primes)
    i = 0
    while i < n:
        if flags[i] != 0:
            i += 1
            continue
        j = i
        while j + 1 < n and flags[j + 1] == 0:
            j += 1
        length = j - i + 1
        if length >= min_length:
            runs.append(NonMaxRun(int(primes[i]), int(primes[j]), length, i == 0 or j == n - 1))
        i = j + 1
    return runs
