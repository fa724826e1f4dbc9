"""Compiled inner loops. Each walks the residues r <- r*base mod p once per digit.

All kernels release the GIL, so census workers can run them on threads.
Callers guarantee p * base < 2^63 so int64 products cannot overflow.
"""
import numpy as np
from numba import njit


@njit(nogil=True, cache=True)
def binary_ones(p, steps):
    """Count 1 digits of 1/p in base 2 over ``steps`` digits; also return the final residue."""
    r = 1
    ones = 0
    for _ in range(steps):
        r += r
        wrap = (p - 1 - r) >> 63  # all ones when r >= p
        r -= p & wrap
        ones -= wrap
    return ones, r


@njit(nogil=True, cache=True)
def expansion_counts(p, base, r0, steps, counts):
    """Accumulate radix-expansion digits floor(base*r/p) into ``counts``."""
    r = r0
    for _ in range(steps):
        x = r * base
        d = x // p
        r = x - d * p
        counts[d] += 1
    return r


@njit(nogil=True, cache=True)
def kak_counts(p, base, steps, counts):
    """Accumulate (base^i mod p) mod base for i = 1..steps into ``counts``."""
    r = 1
    for _ in range(steps):
        r = r * base % p
        counts[r % base] += 1
    return r


@njit(nogil=True, cache=True)
def linear_mobius(limit):
    """Linear sieve for mu(0..limit); mu[0] is left at 0."""
    mu = np.zeros(limit + 1, dtype=np.int8)
    spf = np.zeros(limit + 1, dtype=np.int32)
    primes = np.empty(max(16, limit // 2 + 1), dtype=np.int32)
    n_primes = 0
    if limit >= 1:
        mu[1] = 1
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            mu[i] = -1
            primes[n_primes] = i
            n_primes += 1
        for j in range(n_primes):
            q = primes[j]
            if q > spf[i] or i * q > limit:
                break
            spf[i * q] = q
            if q == spf[i]:
                mu[i * q] = 0
            else:
                mu[i * q] = -mu[i]
    return mu
