from fractions import Fraction
from math import factorial

import pytest

from charsimple import arith


def factorial_valuation(p, n):
    """Exponent of p in n! by dividing the full factorial."""
    m, k = factorial(n), 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def trial_prime_set(n):
    return {d for d in range(2, n + 1) if n % d == 0 and all(d % e for e in range(2, d))}


def test_legendre_examples():
    assert arith.legendre_valuation(2, 4) == 3 == factorial_valuation(2, 4)
    assert arith.legendre_valuation(3, 9) == 4 == factorial_valuation(3, 9)
    for p in (2, 3, 5, 7, 11):
        assert arith.legendre_valuation(p, 1) == 0
        assert arith.legendre_valuation(p, 0) == 0


def test_legendre_rejects_composite():
    with pytest.raises(ValueError):
        arith.legendre_valuation(4, 10)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13, 31])
def test_legendre_matches_factorial_oracle(p):
    m, k = 1, 0
    for n in range(0, 501):
        if n:
            m *= n
            while m % p == 0:
                m //= p
                k += 1
        assert arith.legendre_valuation(p, n) == k
    assert k == factorial_valuation(p, 500)


def test_lemma_prime_full_range():
    report = arith.check_lemma_prime(2000, 2000)
    assert report.ok and report.violations == []
    assert report.checked == len(arith.primes_up_to(2000)) * 1999


def test_lemma_prime_boundaries():
    # n = 2, p = 2: v_2(2!) = 1 = n - 1 and n is a power of two
    assert arith.legendre_valuation(2, 2) == 1
    assert arith.check_lemma_prime(2, 2).ok
    # n = 8: v_2(8!) = 7 = n - 1 with n = 2^3
    assert arith.legendre_valuation(2, 8) == 7 == factorial_valuation(2, 8)
    assert arith.check_lemma_prime(2, 8).ok


def test_lemma_prime_incremental_agrees_with_formula():
    # the sweep accumulates valuations; the violations it reports are the ones the formula gives
    for p in arith.primes_up_to(60):
        for n in range(2, 200):
            v = arith.legendre_valuation(p, n)
            assert v < n
            if v >= n - 1:
                assert p == 2 and arith.is_power_of_two(n)
    assert all(arith.legendre_valuation(2, n) < 2 * (n - 1) for n in range(2, 200))


def test_prime_divisor_set():
    assert arith.prime_divisor_set(360) == {2, 3, 5} == trial_prime_set(360)
    assert arith.prime_divisor_set(7920) == {2, 3, 5, 11} == trial_prime_set(7920)
    assert arith.prime_divisor_set(95040) == {2, 3, 5, 11}
    assert arith.prime_divisor_set(97) == {97}
    with pytest.raises(ValueError):
        arith.prime_divisor_set(1)


def test_prime_divisor_set_oracle():
    for n in range(2, 400):
        assert arith.prime_divisor_set(n) == trial_prime_set(n)


def test_q2plus1_examples():
    assert arith.q2plus1_witness(2) == 5
    assert arith.q2plus1_witness(3) == 5
    assert arith.q2plus1_witness(7) == 5


def test_q2plus1_range():
    for q in range(2, 10**4 + 1):
        p = arith.q2plus1_witness(q)
        assert p % 2 == 1 and arith.is_prime(p)
        assert (q * q + 1) % p == 0
        assert (q**3 * (q**6 - 1)) % p != 0


def test_order_ratio():
    r = arith.order_ratio_cubed_over_squared(60, 360)
    assert r == Fraction(5, 3)
    assert r.denominator != 1


def test_primes_up_to():
    assert arith.primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(arith.is_prime(p) for p in arith.primes_up_to(1000))
    assert len(arith.primes_up_to(2000)) == 303
