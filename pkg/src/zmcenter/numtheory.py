"""Exact integer arithmetic: primality, factoring, orders, and the two
searches that feed the cyclic-realisation construction.

Everything here is deterministic. Primality uses the Miller-Rabin base set
that is proven complete for all inputs below 2^64, so there is no
probabilistic acceptance anywhere in the verification chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SearchBudgetError
from .config import DEFAULT_BOUNDS

# Witness set covering every n < 3.3 * 10^24 (in particular all 64-bit n).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_U64_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n >= _U64_LIMIT:
        raise ValueError(f"primality test is only certified below 2^64, got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs sorted by prime."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, a in self.pairs:
            out *= p**a
        return out

    def exponent_of(self, q: int) -> int:
        for p, a in self.pairs:
            if p == q:
                return a
        return 0

    @property
    def radical(self) -> int:
        out = 1
        for p, _ in self.pairs:
            out *= p
        return out

    def divisors(self) -> list[int]:
        divs = [1]
        for p, a in self.pairs:
            divs = [d * p**k for d in divs for k in range(a + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    """Complete prime factorization by trial division.

    A primality test on the remaining cofactor short-circuits the common
    case of one large prime factor.
    """
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    pairs = []
    for p in (2, 3):
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            pairs.append((p, a))
    # remaining factors are coprime to 6: walk the 6k+-1 wheel
    d = 5
    step = 2
    while d * d <= n:
        if n > 1 and is_prime(n):
            break
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            pairs.append((d, a))
        d += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    pairs.sort()
    return Factorization(tuple(pairs))


def euler_phi(m: int) -> int:
    """Euler totient, computed from the factorization of m."""
    out = m
    for p, _ in factorize(m).pairs:
        out = out // p * (p - 1)
    return out


def multiplicative_order(r: int, m: int) -> int:
    """Least k >= 1 with r^k = 1 (mod m); requires gcd(r, m) = 1."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    r %= m
    if math.gcd(r, m) != 1:
        raise ValueError(f"order of {r} mod {m} undefined: gcd is {math.gcd(r, m)}")
    # the order divides phi(m); strip primes that are not needed
    k = euler_phi(m)
    for p, _ in factorize(k).pairs:
        while k % p == 0 and pow(r, k // p, m) == 1:
            k //= p
    return k


def geometric_sum_mod(r: int, u: int, m: int) -> int:
    """1 + r + ... + r^(u-1) mod m, with the empty sum (u = 0) equal to 0.

    Divide-and-conquer on u: the sum over 2h terms factors as
    (1 + r^h) * (sum over h terms), so the cost is O(log u) multiplications
    regardless of how large u is.
    """
    if u < 0:
        raise ValueError(f"term count must be >= 0, got {u}")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    r %= m
    total = 0
    if u % 2:
        total = geometric_sum_mod(r, u - 1, m)
        total = (1 + r * total) % m
        return total
    if u == 0:
        return 0
    half = geometric_sum_mod(r, u // 2, m)
    return half * (1 + pow(r, u // 2, m)) % m


def _check_prime_power(q_pow: int) -> tuple[int, int]:
    fact = factorize(q_pow)
    if len(fact.pairs) != 1:
        raise ValueError(f"{q_pow} is not a prime power")
    return fact.pairs[0]


def find_prime_in_progression(
    q_pow: int,
    exclusions: frozenset[int] | set[int] = frozenset(),
    budget: int = DEFAULT_BOUNDS.prime_budget,
) -> int:
    """Smallest prime p = 1 + t*q_pow with t >= 1 and p not excluded.

    Existence is only guaranteed asymptotically, so the scan carries an
    explicit budget on t; exhausting it raises rather than answering wrong.
    """
    if q_pow < 2:
        raise ValueError(f"prime power must be >= 2, got {q_pow}")
    _check_prime_power(q_pow)
    for t in range(1, budget + 1):
        p = 1 + t * q_pow
        if p not in exclusions and is_prime(p):
            return p
    raise SearchBudgetError(
        f"no admissible prime 1 + t*{q_pow} with t <= {budget}"
    )


def find_element_of_order(p: int, q_pow: int) -> int:
    """Some r with multiplicative order exactly q_pow modulo the prime p.

    Scans bases g = 2, 3, ... and takes r = g^((p-1)/q_pow); r then has
    order dividing q_pow, and order exactly q_pow iff r^(q_pow/q) != 1.
    Ascending g keeps the result reproducible across runs.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if q_pow == 1:
        return 1
    q, _ = _check_prime_power(q_pow)
    if (p - 1) % q_pow != 0:
        raise ValueError(f"{q_pow} does not divide {p} - 1")
    cofactor = (p - 1) // q_pow
    for g in range(2, p):
        r = pow(g, cofactor, p)
        if pow(r, q_pow // q, p) != 1:
            return r
    raise AssertionError(f"no element of order {q_pow} mod {p}; unreachable for prime p")
