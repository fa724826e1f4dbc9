"""Exact modular arithmetic on 64-bit naturals.

Python integers never overflow, so ``mul_mod`` is a checked ``a * b % m``;
the 64-bit bounds are enforced so results match a fixed-width implementation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt, prod

import numpy as np

from .errors import CapacityError, DomainError
from .primes import is_prime, small_primes

MODULUS_CEILING = 2**63
TRIAL_DIVISION_BOUND = 10**6
DEFAULT_SEED = 20070101


def _check_modulus(m: int) -> None:
    if m <= 0:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if m >= MODULUS_CEILING:
        raise CapacityError(f"modulus {m} is not below 2^63")


def mul_mod(a: int, b: int, m: int) -> int:
    """(a * b) mod m for 0 <= a, b < m < 2^63."""
    _check_modulus(m)
    if not (0 <= a < m and 0 <= b < m):
        raise DomainError(f"operands must lie in [0, {m}), got {a}, {b}")
    return a * b % m


def pow_mod(b: int, e: int, m: int) -> int:
    """b^e mod m by left-to-right square-and-multiply."""
    _check_modulus(m)
    if e < 0:
        raise DomainError("negative exponent")
    b %= m
    result = 1 % m
    # operands stay reduced below m, as mul_mod requires
    for bit in bin(e)[2:]:
        result = result * result % m
        if bit == "1":
            result = result * b % m
    return result


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return prod(q**k for q, k in self.factors)

    @property
    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    def is_squarefree(self) -> bool:
        return all(k == 1 for _, k in self.factors)


def _pollard_brent(n: int, rnd: random.Random) -> int:
    """Return a non-trivial factor of the odd composite n."""
    while True:
        y = rnd.randrange(1, n)
        c = rnd.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batch overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, rnd: random.Random, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m, rnd)
        stack += [d, m // d]


def factorize(n: int, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete prime factorization of 1 <= n < 2^63.

    Trial division by the primes up to 10^6 handles every p - 1 in the
    census ranges; what survives is split by Pollard-Brent, seeded from
    ``(seed, n)`` only so results never depend on call order.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    if n >= MODULUS_CEILING:
        raise CapacityError(f"{n} is not below 2^63")
    found: dict[int, int] = {}
    rest = n
    while not rest & 1 and rest > 1:
        rest >>= 1
        found[2] = found.get(2, 0) + 1
    if rest > 1:
        bound = min(TRIAL_DIVISION_BOUND, isqrt(rest))
        cands = small_primes(bound)[1:]
        if len(cands) > 64:
            cands = cands[rest % cands == 0]
        for q in cands.tolist():
            if q * q > rest:
                break
            while rest % q == 0:
                rest //= q
                found[q] = found.get(q, 0) + 1
        if rest > 1:
            if rest < TRIAL_DIVISION_BOUND**2 or is_prime(rest):
                # every prime factor of rest exceeds the trial bound
                found[rest] = found.get(rest, 0) + 1
            else:
                _split_large(rest, random.Random(f"{seed}:{n}"), found)
    return Factorization(n, tuple(sorted(found.items())))


def _check_order_args(b: int, p: int) -> int:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    r = b % p
    if b <= 0 or r == 0:
        raise DomainError(f"base {b} has no multiplicative order modulo {p}")
    return r


def multiplicative_order(b: int, p: int, seed: int = DEFAULT_SEED) -> int:
    """Least t >= 1 with b^t = 1 (mod p), for prime p.

    Starts from p - 1 and strips each prime factor q while b^(t/q) is still 1.
    """
    b = _check_order_args(b, p)
    t = p - 1
    for q, k in factorize(t, seed).factors:
        for _ in range(k):
            if pow_mod(b, t // q, p) != 1:
                break
            t //= q
    return t


def is_max_length(b: int, p: int, seed: int = DEFAULT_SEED) -> bool:
    """True iff b is a primitive root mod p, i.e. 1/p has period p - 1 in base b."""
    return multiplicative_order(b, p, seed) == p - 1
