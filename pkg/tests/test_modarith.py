import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dseqlab.errors import DomainError
from dseqlab.modarith import factorize, is_max_length, mul_mod, multiplicative_order, pow_mod
from dseqlab.primes import is_prime, sieve_upto
from oracles import brute_order, brute_orders_all


def test_mul_mod_examples():
    assert mul_mod(0, 5, 7) == 0
    assert mul_mod(6, 6, 7) == 1
    # 2^80 mod (2^61 - 1) by big-integer arithmetic
    assert mul_mod(2**40, 2**40, 2**61 - 1) == 524288


def test_mul_mod_domain():
    with pytest.raises(DomainError):
        mul_mod(1, 1, 0)
    with pytest.raises(DomainError):
        mul_mod(7, 1, 7)


def test_pow_mod_examples():
    assert pow_mod(2, 3, 7) == 1
    assert pow_mod(2, 10, 1000) == 24
    assert pow_mod(10, 6, 7) == 1
    assert pow_mod(5, 0, 1) == 0
    assert pow_mod(5, 0, 13) == 1
    with pytest.raises(DomainError):
        pow_mod(2, 3, 0)


def test_against_bigint_oracle():
    rnd = random.Random(1)
    for _ in range(10_000):
        m = rnd.randrange(1, 2**63)
        a, b = rnd.randrange(m), rnd.randrange(m)
        e = rnd.randrange(2**64)
        assert mul_mod(a, b, m) == a * b % m
        assert pow_mod(a, e, m) == pow(a, e, m)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(60).factors == ((2, 2), (3, 1), (5, 1))
    f = factorize(999982)
    assert f.value() == 999982
    assert all(is_prime(q) for q in f.primes)
    assert f.factors == ((2, 1), (79, 1), (6329, 1))


@pytest.mark.parametrize(
    "n",
    [
        2**62,
        (2**31 - 1) * (2**31 - 19),          # two primes above the trial bound
        1000003 * 1000033 * 7,
        999983**3,
        4611686014132420609,                 # (2^31 - 1)^2
        2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41 * 43 * 47,
        2**61 - 1,
    ],
)
def test_factorize_hard(n):
    f = factorize(n)
    assert f.value() == n
    qs = f.primes
    assert qs == sorted(set(qs))
    assert all(is_prime(q) for q in qs)


@given(st.integers(1, 2**63 - 1))
def test_factorize_property(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(q) and k >= 1 for q, k in f.factors)
    assert [q for q, _ in f.factors] == sorted({q for q, _ in f.factors})


def test_factorize_seed_independent():
    n = (2**31 - 1) * (2**31 - 19)
    assert factorize(n, seed=1) == factorize(n, seed=2)


@pytest.mark.parametrize("b,p,t", [(2, 7, 3), (2, 11, 10), (2, 17, 8), (10, 7, 6), (10, 3, 1)])
def test_order_examples(b, p, t):
    assert multiplicative_order(b, p) == t


def test_order_matches_brute_force():
    for p in sieve_upto(2000):
        got = [multiplicative_order(b, p) for b in range(1, p)]
        assert got == brute_orders_all(p).tolist()
    assert brute_orders_all(17).tolist() == [brute_order(b, 17) for b in range(1, 17)]


def test_order_divisibility_and_minimality():
    for p in sieve_upto(3000)[1:]:
        for b in (2, 3, 10, p - 1):
            if b % p == 0:
                continue
            t = multiplicative_order(b, p)
            assert (p - 1) % t == 0
            assert pow_mod(b, t, p) == 1
            for d in range(1, t):
                if t % d == 0:
                    assert pow_mod(b, d, p) != 1


def test_order_domain():
    with pytest.raises(DomainError):
        multiplicative_order(0, 7)
    with pytest.raises(DomainError):
        multiplicative_order(2, 9)
    with pytest.raises(DomainError):
        multiplicative_order(14, 7)


def test_max_length():
    assert is_max_length(2, 11)
    assert not is_max_length(2, 7)
    assert not is_max_length(2, 970279)
    assert not is_max_length(2, 17)


def test_order_large_prime():
    p = 2**61 - 1
    assert multiplicative_order(2, p) == 61
    t = multiplicative_order(3, p)
    assert pow(3, t, p) == 1 and (p - 1) % t == 0
