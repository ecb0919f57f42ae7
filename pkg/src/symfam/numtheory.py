"""Exact integer arithmetic helpers: Moebius, totient, divisors, prime-set splits.

Everything here runs on desk-scale inputs (a few hundred at most), so plain
trial division is used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p, exponent), ...) with p ascending."""
    _check_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def moebius(n: int) -> int:
    _check_positive(n)
    mu = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def totient(n: int) -> int:
    _check_positive(n)
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All divisors of n, strictly ascending (starts at 1, ends at n)."""
    _check_positive(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, or (with complement=True) every prime not listed."""

    primes: tuple[int, ...] = ()
    complement: bool = False

    def __post_init__(self):
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be strictly increasing and distinct")

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(tuple(sorted(set(primes))))

    @property
    def bar(self) -> "PrimeSet":
        return PrimeSet(self.primes, not self.complement)

    def contains(self, p: int) -> bool:
        listed = p in self.primes
        return listed != self.complement

    def admits(self, n: int) -> bool:
        """True when every prime factor of n lies in this set (n=1 included)."""
        return all(self.contains(p) for p, _ in factorize(n))

    def describe(self) -> str:
        body = "{" + ",".join(str(p) for p in self.primes) + "}"
        return f"bar{body}" if self.complement else body


def s_split(n: int, s: PrimeSet) -> tuple[int, int]:
    """Split n = Q*L with Q the maximal divisor whose primes all lie in s.

    Complement sets split against the listed primes' complement, i.e. Q
    collects the prime powers for primes the set contains.
    """
    _check_positive(n)
    q = 1
    for p, e in factorize(n):
        if s.contains(p):
            q *= p**e
    return q, n // q
