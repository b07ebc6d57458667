"""Prime valuations of factorials and the divisibility facts built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]


def legendre_valuation(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n!``: sum of ``n // p**i``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def valuation(p: int, n: int) -> int:
    """Exponent of ``p`` in ``n`` (``n >= 1``) by repeated division."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass
class DivisibilityReport:
    p_max: int
    n_max: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def check_lemma_prime(p_max: int, n_max: int) -> DivisibilityReport:
    """Check the three factorial divisibility clauses for primes ``p <= p_max``, ``2 <= n <= n_max``.

    Clause 1: ``p**n`` does not divide ``n!``.
    Clause 2: if ``p**(n-1)`` divides ``n!`` then ``p == 2`` and ``n`` is a power of two.
    Clause 3: ``4**(n-1)`` does not divide ``n!``.

    Violations are ``(p, n, clause)`` triples.  Valuations are accumulated
    incrementally in ``n``; the tests cross-check them against
    :func:`legendre_valuation`.
    """
    if p_max < 2 or n_max < 2:
        raise ValueError("p_max and n_max must be at least 2")
    report = DivisibilityReport(p_max, n_max)
    for p in primes_up_to(p_max):
        v = 0
        for n in range(2, n_max + 1):
            m = n
            while m % p == 0:
                m //= p
                v += 1
            report.checked += 1
            if v >= n:
                report.violations.append((p, n, 1))
            if v >= n - 1 and not (p == 2 and is_power_of_two(n)):
                report.violations.append((p, n, 2))
            if p == 2 and v >= 2 * (n - 1):
                report.violations.append((p, n, 3))
    return report


def prime_divisor_set(n: int) -> set[int]:
    if n < 2:
        raise ValueError("n must be at least 2")
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


class WitnessNotFound(ArithmeticError):
    pass


_SMALL_PRIMES: list[int] = []


def _odd_prime_factors(n: int):
    global _SMALL_PRIMES
    while n % 2 == 0:
        n //= 2
    limit = isqrt(n)
    if not _SMALL_PRIMES or _SMALL_PRIMES[-1] < limit:
        _SMALL_PRIMES = primes_up_to(max(2 * limit, 1000))
    for p in _SMALL_PRIMES[1:]:
        if p * p > n:
            break
        if n % p == 0:
            yield p
            while n % p == 0:
                n //= p
    if n > 1:
        yield n


def q2plus1_witness(q: int) -> int:
    """An odd prime dividing ``q**2 + 1`` but not ``q**3 * (q**6 - 1)``.

    Raises :class:`WitnessNotFound` if none exists.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    for p in _odd_prime_factors(q * q + 1):
        if (pow(q, 3, p) * (pow(q, 6, p) - 1)) % p != 0:
            return p
    raise WitnessNotFound(f"no odd prime witness for q={q}")


def order_ratio_cubed_over_squared(t_order: int, q_order: int) -> Fraction:
    """``|T|^3 / |Q|^2`` as an exact fraction."""
    return Fraction(t_order**3, q_order**2)
