"""Small prime utilities shared across the package.

Factorization uses a cached smallest-prime-factor sieve for inputs below
``_SPF_CAP`` and falls back to trial division above it, so occasional large
inputs do not force a huge sieve allocation.
"""

from array import array
from math import isqrt

_SPF_CAP = 1 << 20

_spf: array | None = None
_spf_limit = 0


def smallest_prime_factor_sieve(limit: int) -> array:
    """Return an array ``spf`` with spf[n] = smallest prime factor of n, spf[1] = 1."""
    spf = array("i", range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:  # p prime
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def _ensure_spf(limit: int) -> None:
    global _spf, _spf_limit
    if limit > _spf_limit:
        _spf_limit = max(2 * _spf_limit, limit, 1 << 10)
        _spf = smallest_prime_factor_sieve(_spf_limit)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as an ascending list of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: list[tuple[int, int]] = []
    if n <= _SPF_CAP:
        _ensure_spf(n)
        spf = _spf
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 2 if f % 6 == 5 else 4  # 5, 7, 11, 13, ... (6k +- 1)
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"valuation undefined for {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
