"""Small integer helpers: primality, factorization, multiplicative orders."""
from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Trial-division primality test, fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Factor n >= 1 into {prime: exponent}."""
    if n < 1:
        raise ValueError("factorization needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(prime_factors(n)))


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    part = 1
    while n % p == 0:
        part *= p
        n //= p
    return part


def is_prime_power_of(n: int, p: int) -> bool:
    """True when n is p^k for some k >= 0."""
    return p_part(n, p) == n


def multiplicative_order(x: int, m: int) -> int:
    """Order of x in the unit group mod m; requires gcd(x, m) == 1."""
    if m == 1:
        return 1
    x %= m
    if math.gcd(x, m) != 1:
        raise ValueError(f"{x} is not a unit mod {m}")
    k, y = 1, x
    while y != 1:
        y = y * x % m
        k += 1
    return k


def primes_up_to(n: int) -> list[int]:
    """Ascending primes <= n via a sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, int(math.isqrt(n)) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return [i for i, flag in enumerate(sieve) if flag]
