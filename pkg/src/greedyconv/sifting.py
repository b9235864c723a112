"""Selective sifting and its closed-form membership oracles.

``ssift(S, N)`` keeps 1 and removes every n = a*b with a in S and b a smaller
survivor (b = 1 included, so the elements of S themselves are removed).  For
several families of sifting sets the surviving set has an exact description
in terms of p-adic valuations; those predicates are implemented here as
independent oracles.
"""

from dataclasses import dataclass
from typing import Callable, Iterable

from .primes import is_prime, valuation


@dataclass(frozen=True)
class SiftResult:
    """Survivors of selective sifting on [1..n_max].

    ``member`` is a bitmap of length n_max + 1 with index 0 unused.
    """

    s_set: frozenset[int]
    n_max: int
    member: bytearray

    def __contains__(self, n: int) -> bool:
        return 1 <= n <= self.n_max and bool(self.member[n])

    def members(self) -> list[int]:
        member = self.member
        return [n for n in range(1, self.n_max + 1) if member[n]]

    def count(self) -> int:
        return self.member.count(1)


def _checked_set(s_set: Iterable[int]) -> frozenset[int]:
    out = frozenset(s_set)
    for s in out:
        if s < 2:
            raise ValueError(f"sifting set elements must be >= 2, got {s}")
    return out


def ssift(s_set: Iterable[int], n_max: int) -> SiftResult:
    """Selective sifting of [1..n_max] by the finite set s_set.

    Forward pass: every survivor b kills its multiples a*b for a in s_set.
    When n is reached all kills aimed at it were already recorded, so the
    bitmap entry is final.  Cost O(n_max * |s_set|).
    """
    sset = _checked_set(s_set)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    member = bytearray(b"\x01") * (n_max + 1)
    member[0] = 0
    s_list = sorted(sset)
    for n in range(1, n_max + 1):
        if member[n]:
            for a in s_list:
                m = a * n
                if m > n_max:
                    break
                member[m] = 0
    return SiftResult(sset, n_max, member)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def oracle_valuation_parity(p: int, n: int) -> bool:
    """Membership in ssift({p}): the p-valuation of n is even."""
    _require_prime(p)
    return valuation(p, n) % 2 == 0


def oracle_pq(p: int, q: int, n: int, *, include_pq: bool) -> bool:
    """Membership oracle for two distinct primes.

    include_pq=True models ssift({p, q, p*q}): both valuations even.
    include_pq=False models ssift({p, q}): the valuations agree mod 2.
    """
    _require_prime(p)
    _require_prime(q)
    if p == q:
        raise ValueError("primes must be distinct")
    a = valuation(p, n)
    b = valuation(q, n)
    if include_pq:
        return a % 2 == 0 and b % 2 == 0
    return a % 2 == b % 2


def oracle_pk(p: int, k: int, n: int) -> bool:
    """Membership in ssift({p**k}): val_p(n) mod 2k lies in {0, ..., k-1}."""
    _require_prime(p)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return valuation(p, n) % (2 * k) < k


def oracle_p_pk(p: int, k: int, n: int) -> bool:
    """Membership in ssift({p, p**k}).

    Odd k: val_p(n) is even.  Even k: val_p(n) mod (k+1) is one of
    0, 2, 4, ..., k-2.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    a = valuation(p, n)
    if k % 2 == 1:
        return a % 2 == 0
    r = a % (k + 1)
    return r % 2 == 0 and r <= k - 2


def matching_oracle(s_set: Iterable[int]) -> tuple[str, Callable[[int], bool]] | None:
    """Closed-form membership predicate for s_set, if one is known.

    Recognizes {p}, {p**k}, {p, p**k}, {p, q} and {p, q, p*q} for primes
    p != q.  Returns (description, predicate) or None.
    """
    sset = _checked_set(s_set)
    elems = sorted(sset)
    if len(elems) == 1:
        s = elems[0]
        if is_prime(s):
            return (f"val_{s}(n) even", lambda n: oracle_valuation_parity(s, n))
        fact = _prime_power(s)
        if fact is not None:
            p, k = fact
            return (f"val_{p}(n) mod {2 * k} in 0..{k - 1}",
                    lambda n: oracle_pk(p, k, n))
        return None
    if len(elems) == 2:
        a, b = elems
        if is_prime(a) and is_prime(b):
            return (f"val_{a}(n) = val_{b}(n) mod 2",
                    lambda n: oracle_pq(a, b, n, include_pq=False))
        if is_prime(a):
            fact = _prime_power(b)
            if fact is not None and fact[0] == a:
                k = fact[1]
                return (f"ssift({{{a}, {a}**{k}}}) valuation classes",
                        lambda n: oracle_p_pk(a, k, n))
        return None
    if len(elems) == 3:
        a, b, c = elems
        if is_prime(a) and is_prime(b) and c == a * b:
            return (f"val_{a}(n) and val_{b}(n) both even",
                    lambda n: oracle_pq(a, b, n, include_pq=True))
    return None


def _prime_power(n: int) -> tuple[int, int] | None:
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 and is_prime(p) else None
    return (n, 1) if is_prime(n) else None
