"""Finite-cutoff evaluations of zeta sums, Euler products and the Mobius series.

Products over primes are accumulated in the log domain and exponentiated
once. Sums run from the largest n down so small terms are added first;
chunk sums use ``math.fsum`` so the single-threaded result is bit-stable.
"""
from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CapacityError, DomainError
from .modarith import factorize
from .primes import PrimeRange, iter_prime_segments

MOBIUS_CEILING = 10**9
_CHUNK = 1 << 20


class CutoffKind(enum.Enum):
    TERM_COUNT = "term_count"
    PRIME_BOUND = "prime_bound"


@dataclass(frozen=True)
class ZetaPartial:
    s: float
    cutoff_kind: CutoffKind
    cutoff: int
    value: float
    log_value: float


def _check_s(s) -> float:
    if isinstance(s, complex) or (isinstance(s, numbers.Complex) and not isinstance(s, numbers.Real)):
        raise DomainError("complex s (Riemann direction) is out of scope; s must be a positive real")
    s = float(s)
    if not s > 0 or math.isinf(s):
        raise DomainError(f"s must be a finite positive real, got {s}")
    return s


def _log_or_nan(x: float) -> float:
    return math.log(x) if x > 0 else math.nan


def _descending_sum(term_chunk, n: int) -> float:
    """fsum of term_chunk(a, b) over [1, n], visiting chunks from the top down."""
    partials = []
    hi = n
    while hi >= 1:
        lo = max(1, hi - _CHUNK + 1)
        terms = term_chunk(lo, hi)
        partials.append(math.fsum(terms[::-1]))
        hi = lo - 1
    return math.fsum(partials)


def zeta_partial_sum(s, n: int) -> ZetaPartial:
    """Sum of k^-s for k = 1..n."""
    s = _check_s(s)
    if n < 1:
        raise DomainError(f"term count must be >= 1, got {n}")
    value = _descending_sum(lambda a, b: np.arange(a, b + 1, dtype=np.float64) ** -s, n)
    return ZetaPartial(s, CutoffKind.TERM_COUNT, n, value, _log_or_nan(value))


def log_euler_partial(s, x: int) -> float:
    """Sum over primes p <= x of ln(1 - p^-s)."""
    s = _check_s(s)
    if x < 2:
        raise DomainError(f"prime bound must be >= 2, got {x}")
    partials = []
    for seg in iter_prime_segments(PrimeRange(2, x)):
        partials.append(math.fsum(np.log1p(-(seg.astype(np.float64) ** -s))))
    return math.fsum(partials)


def euler_product_inverse(s, x: int) -> ZetaPartial:
    """Product over primes p <= x of (1 - p^-s), a truncation of 1/zeta(s)."""
    log_value = log_euler_partial(s, x)
    return ZetaPartial(_check_s(s), CutoffKind.PRIME_BOUND, x, math.exp(log_value), log_value)


@dataclass(frozen=True)
class MobiusTable:
    """mu(n) for 1 <= n <= limit; ``values[0]`` is an unused 0."""

    limit: int
    values: np.ndarray

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"mu({n}) outside table 1..{self.limit}")
        return int(self.values[n])


def mobius_sieve(limit: int) -> MobiusTable:
    """Linear sieve over smallest prime factors."""
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if limit > MOBIUS_CEILING:
        raise CapacityError(f"limit {limit} exceeds {MOBIUS_CEILING}")
    values = _kernels.linear_mobius(limit)
    values.flags.writeable = False
    return MobiusTable(limit, values)


def mobius(n: int) -> int:
    """mu(n) from the factorization of n."""
    if n < 1:
        raise DomainError(f"mu is defined for n >= 1, got {n}")
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if len(f.factors) % 2 else 1


def mobius_partial_sum(s, n: int) -> ZetaPartial:
    """Sum of mu(k) k^-s for k = 1..n (tends to 1/zeta(s))."""
    s = _check_s(s)
    if n < 1:
        raise DomainError(f"term count must be >= 1, got {n}")
    mu = mobius_sieve(n).values.astype(np.float64)

    def chunk(a, b):
        k = np.arange(a, b + 1, dtype=np.float64)
        return mu[a : b + 1] * k**-s

    value = _descending_sum(chunk, n)
    return ZetaPartial(s, CutoffKind.TERM_COUNT, n, value, _log_or_nan(value))
