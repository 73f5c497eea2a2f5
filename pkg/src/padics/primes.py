"""Primality testing and small-scale integer factorization.

Miller-Rabin with the 12-witness set is a proof of primality below
3317044064679887385961981 (> 2**81); beyond that the test keeps extra
pseudo-random rounds and the verdict is only probabilistic, which callers
surface via the ``certified`` flag on places.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import isqrt

from .errors import FactorizationLimitExceeded

_DETERMINISTIC_BOUND = 3317044064679887385961981
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PROBABILISTIC_ROUNDS = 48

DEFAULT_FACTOR_BOUND = 10**6


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def certify_prime(n: int) -> tuple[bool, bool]:
    """Return ``(is_prime, deterministic)`` for ``n``.

    ``deterministic`` is False only for probable primes too large for the
    fixed witness set to be a proof.
    """
    if n < 2:
        return False, True
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p, True
    if n < _DETERMINISTIC_BOUND:
        return _miller_rabin(n, _WITNESSES), True
    rng = random.Random(n)
    extra = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return _miller_rabin(n, _WITNESSES + extra), False


def is_prime(n: int) -> bool:
    return certify_prime(n)[0]


_prime_cache: list[int] = []
_prime_cache_limit = 1


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, from a cached sieve that grows on demand."""
    global _prime_cache, _prime_cache_limit
    if limit > _prime_cache_limit:
        new_limit = max(limit, 2 * _prime_cache_limit, 1 << 10)
        sieve = bytearray([1]) * (new_limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, isqrt(new_limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray((new_limit - i * i) // i + 1)
        _prime_cache = [i for i in range(new_limit + 1) if sieve[i]]
        _prime_cache_limit = new_limit
    if _prime_cache and _prime_cache[-1] <= limit:
        return _prime_cache
    from bisect import bisect_right

    return _prime_cache[: bisect_right(_prime_cache, limit)]


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Factor ``n >= 1`` by trial division with divisors capped at ``bound``.

    A cofactor that survives the bound is accepted only if it is itself a
    certified prime; otherwise ``FactorizationLimitExceeded`` is raised so
    the caller never sees a silently incomplete support set.
    """
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    factors: dict[int, int] = {}
    if n == 1:
        return factors
    cap = min(bound, isqrt(n))
    for p in primes_upto(cap):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        if n <= bound * bound or is_prime(n):
            # either no divisor <= bound <= sqrt(n) exists, or MR certifies it
            factors[n] = factors.get(n, 0) + 1
        else:
            raise FactorizationLimitExceeded(
                f"cofactor {n} has no prime factor below {bound}"
            )
    return factors
