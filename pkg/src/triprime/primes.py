"""Small-integer prime utilities (trial division; everything in scope is tiny)."""

from functools import lru_cache


@lru_cache(maxsize=None)
def prime_factors(n):
    """Return the set of distinct prime divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"prime_factors requires n >= 1, got {n}")
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
    return frozenset(out)


def is_squarefree(n):
    """True if n >= 1 has no repeated prime factor."""
    if n < 1:
        raise ValueError(f"is_squarefree requires n >= 1, got {n}")
    m = 1
    for p in prime_factors(n):
        m *= p
    return m == n
