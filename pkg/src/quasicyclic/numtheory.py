"""Integer helpers: primality, factorisation, divisors, Gaussian coefficients."""

import math
import random
from functools import lru_cache

from .errors import BadArguments

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


@lru_cache(maxsize=None)
def factorint(n):
    """Prime factorisation as a sorted tuple of (prime, exponent) pairs.

    Trial division up to 10**4, Pollard rho for whatever is left.
    """
    if n < 1:
        raise BadArguments(f"cannot factor {n}")
    factors = {}
    for p in range(2, 10_000):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.extend((d, m // d))
    return tuple(sorted(factors.items()))


def prime_divisors(n):
    return [p for p, _ in factorint(n)]


def divisors(n):
    """All positive divisors of n in increasing order."""
    divs = [1]
    for p, e in factorint(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def gaussian(n, k, q):
    """The q-ary Gaussian binomial coefficient [n choose k]_q, exact."""
    if not (0 <= k <= n) or q < 2:
        raise BadArguments(f"gaussian needs 0 <= k <= n and q >= 2, got n={n} k={k} q={q}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def int_log(value, base):
    """Return e with base**e == value, or None when value is not a power."""
    e, acc = 0, 1
    while acc < value:
        acc *= base
        e += 1
    return e if acc == value else None
