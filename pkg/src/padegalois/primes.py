"""Small prime-number helpers: deterministic tests and ascending streams.

The Miller-Rabin test below is deterministic for every integer under
3317044064679887385961981 (fixed base set), which covers everything this
package ever feeds it; inputs beyond that raise rather than guess.
"""

from __future__ import annotations

from typing import Iterator

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981
_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= _MR_LIMIT:
        raise ValueError(f"primality test out of deterministic range: {n}")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def primes_from(start: int) -> Iterator[int]:
    """Ascending primes >= start, unbounded."""
    p = start - 1
    while True:
        p = next_prime(p)
        yield p


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p < hi."""
    out = []
    for p in primes_from(max(lo, 2)):
        if p >= hi:
            break
        out.append(p)
    return out
