"""Small exact number-theory helpers (trial division scale)."""

from __future__ import annotations

from functools import lru_cache

from .errors import NotCoprime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in prime_factors(n):
        out[p] = v_p(n, p)
    return out


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def v_p(n: int, p: int) -> int:
    """p-adic valuation of n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    return p ** v_p(n, p)


def p_prime_part(n: int, p: int) -> int:
    return abs(n) // p_part(n, p)


def euler_phi(n: int) -> int:
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Least d >= 1 with a^d == 1 (mod n); requires gcd(a, n) == 1."""
    from math import gcd

    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not invertible modulo {n}")
    d, x = 1, a
    while x != 1 % n:
        x = x * a % n
        d += 1
    return d


def primitive_root(p: int) -> int:
    """Least primitive root modulo a prime p."""
    if p == 2:
        return 1
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1)):
            return g
    raise ValueError(f"{p} is not prime")
