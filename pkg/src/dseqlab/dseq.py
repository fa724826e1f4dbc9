"""Digit sequences of prime reciprocals 1/p in an arbitrary base.

Digits are indexed from i = 1, the first fractional digit. Two rules exist:

* ``Expansion``: the true radix digit, floor(base * (base^(i-1) mod p) / p).
* ``KakFormula``: (base^i mod p) mod base, the binary d-sequence formula
  carried over verbatim to other bases.

In base 2 the two coincide for every odd p. In other bases they differ.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, TerminatingExpansionError
from .modarith import DEFAULT_SEED, multiplicative_order, pow_mod
from .primes import is_prime

_INT64_SAFE = 2**63


class DigitRule(enum.Enum):
    EXPANSION = "expansion"
    KAK_FORMULA = "kak"

    @classmethod
    def parse(cls, value) -> DigitRule:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown digit rule {value!r}") from None


@dataclass(frozen=True)
class ReciprocalProfile:
    p: int
    base: int
    rule: DigitRule
    period: int
    max_length: bool
    digit_counts: tuple[int, ...]
    half_complement: bool

    @property
    def zeros(self) -> int:
        return self.digit_counts[0]

    @property
    def ones(self) -> int:
        return self.digit_counts[1]


def _check(p: int, base: int) -> None:
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if base % p == 0:
        raise TerminatingExpansionError(p, base)


def digit_at(p: int, base: int, i: int, rule=DigitRule.EXPANSION) -> int:
    """The i-th digit (i >= 1) of the d-sequence of 1/p."""
    _check(p, base)
    if i < 1:
        raise DomainError(f"digit index starts at 1, got {i}")
    if DigitRule.parse(rule) is DigitRule.KAK_FORMULA:
        return pow_mod(base, i, p) % base
    return base * pow_mod(base, i - 1, p) // p


def _walk(p: int, base: int, r: int, n: int, rule: DigitRule) -> list[int]:
    out = []
    if rule is DigitRule.KAK_FORMULA:
        for _ in range(n):
            r = r * base % p
            out.append(r % base)
    else:
        for _ in range(n):
            d, r = divmod(r * base, p)
            out.append(d)
    return out


def expand(p: int, base: int, n: int, rule=DigitRule.EXPANSION) -> list[int]:
    """First n digits, one modular multiplication per digit."""
    _check(p, base)
    if n < 0:
        raise DomainError("digit count must be non-negative")
    return _walk(p, base, 1, n, DigitRule.parse(rule))


def expand_fraction(k: int, p: int, base: int, n: int) -> list[int]:
    """First n fractional digits of k/p (true radix expansion)."""
    _check(p, base)
    if not 1 <= k < p:
        raise DomainError(f"numerator must satisfy 1 <= k < {p}, got {k}")
    if n < 0:
        raise DomainError("digit count must be non-negative")
    return _walk(p, base, k, n, DigitRule.EXPANSION)


def period_digit_counts(p: int, base: int, period: int, rule: DigitRule) -> np.ndarray:
    """Digit histogram over exactly one period; ``period`` must be the true order."""
    counts = np.zeros(base, dtype=np.int64)
    if p * base >= _INT64_SAFE:
        r = 1
        for _ in range(period):
            d, r = divmod(r * base, p)
            counts[r % base if rule is DigitRule.KAK_FORMULA else d] += 1
    elif base == 2:
        ones, r = _kernels.binary_ones(p, period)
        counts[0], counts[1] = period - ones, ones
    elif rule is DigitRule.KAK_FORMULA:
        r = _kernels.kak_counts(p, base, period, counts)
    else:
        r = _kernels.expansion_counts(p, base, 1, period, counts)
    if r != 1:
        raise DomainError(f"{period} is not the period of 1/{p} in base {base}")
    return counts


def profile(p: int, base: int = 2, rule=DigitRule.EXPANSION, seed: int = DEFAULT_SEED) -> ReciprocalProfile:
    """Period, maximum-length flag and full-period digit counts of 1/p."""
    _check(p, base)
    rule = DigitRule.parse(rule)
    t = multiplicative_order(base, p, seed)
    counts = period_digit_counts(p, base, t, rule)
    half = t % 2 == 0 and pow_mod(base, t // 2, p) == p - 1
    return ReciprocalProfile(
        p=p,
        base=base,
        rule=rule,
        period=t,
        max_length=t == p - 1,
        digit_counts=tuple(int(c) for c in counts),
        half_complement=half,
    )
