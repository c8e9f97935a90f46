"""Small integer-arithmetic helpers shared across modules."""

from functools import lru_cache
from math import gcd

import sympy


def is_prime(n: int) -> bool:
    return sympy.isprime(n)


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple:
    """Prime factorization of n as a sorted tuple of (prime, exponent)."""
    if n <= 0:
        raise ValueError("factorint expects a positive integer")
    return tuple(sorted(sympy.factorint(n).items()))


def prime_divisors(n: int) -> list:
    return [p for p, _ in factorint(n)]


def crt_pair(a1: int, m1: int, a2: int, m2: int):
    """Solve x = a1 (mod m1), x = a2 (mod m2); None when incompatible."""
    g = gcd(m1, m2)
    if (a2 - a1) % g != 0:
        return None
    lcm = m1 // g * m2
    t = ((a2 - a1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (a1 + m1 * t) % lcm, lcm


def solve_linear_congruence(a: int, b: int, m: int):
    """All x mod m with a*x = b (mod m), as (x0, step); None if unsolvable."""
    g = gcd(a, m)
    if b % g != 0:
        return None
    m_ = m // g
    x0 = (b // g) * pow(a // g, -1, m_) % m_
    return x0, m_


def order_in_zmod(a: int, n: int) -> int:
    """Order of the class of a in the additive group Z/n."""
    return n // gcd(a % n, n)
