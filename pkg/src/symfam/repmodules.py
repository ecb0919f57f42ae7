"""Constructors for the representation families, all funneled through one formula.

Every family is (1/n) * sum over d|n of psi(d) p_d^(n/d) for an arithmetic
weight psi selected by a PsiSpec. The named families only choose psi; none of
them performs induction directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .numtheory import PrimeSet, divisors, moebius, s_split, totient
from .partitions import Partition
from .symfunc import PowerSumPoly


@dataclass(frozen=True)
class SubsetRule:
    """Decidable membership rule for a subset T of the positive integers."""

    kind: str  # explicit | le | div | mod1 | pow | coprime | all
    values: tuple[int, ...] = ()
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("explicit", "le", "div", "mod1", "pow", "coprime", "all"):
            raise ValueError(f"unknown subset rule kind {self.kind!r}")
        if self.kind in ("le", "div", "pow") and self.k < 1:
            raise ValueError(f"rule {self.kind} needs k >= 1")
        if self.kind == "mod1" and self.k < 1:
            raise ValueError("rule mod1 needs k >= 1")

    @classmethod
    def explicit(cls, values) -> "SubsetRule":
        return cls("explicit", tuple(sorted(set(values))))

    @classmethod
    def up_to(cls, k: int) -> "SubsetRule":
        return cls("le", k=k)

    @classmethod
    def divisors_of(cls, k: int) -> "SubsetRule":
        return cls("div", k=k)

    @classmethod
    def one_mod(cls, k: int) -> "SubsetRule":
        return cls("mod1", k=k)

    @classmethod
    def powers_of(cls, k: int) -> "SubsetRule":
        return cls("pow", k=k)

    @classmethod
    def coprime_to(cls, values) -> "SubsetRule":
        return cls("coprime", tuple(sorted(set(values))))

    @classmethod
    def everything(cls) -> "SubsetRule":
        return cls("all")

    def contains(self, m: int) -> bool:
        if m < 1:
            return False
        if self.kind == "explicit":
            return m in self.values
        if self.kind == "le":
            return m <= self.k
        if self.kind == "div":
            return self.k % m == 0
        if self.kind == "mod1":
            return m % self.k == 1 % self.k
        if self.kind == "pow":
            if m == 1:
                return True
            if self.k == 1:
                return False
            while m % self.k == 0:
                m //= self.k
            return m == 1
        if self.kind == "coprime":
            return all(gcd(m, v) == 1 for v in self.values)
        return True  # all

    def members_up_to(self, n: int) -> list[int]:
        return [m for m in range(1, n + 1) if self.contains(m)]

    def describe(self) -> str:
        if self.kind == "explicit":
            return "{" + ",".join(str(v) for v in self.values) + "}"
        if self.kind == "coprime":
            return "coprime({" + ",".join(str(v) for v in self.values) + "})"
        if self.kind == "all":
            return "all"
        return f"{self.kind}({self.k})"


@dataclass(frozen=True)
class PsiSpec:
    """A named arithmetic weight function selecting a representation family.

    tag is one of moebius, totient, prime_set, prime_set_bar, foulkes, subset,
    custom. The foulkes weight depends on the ambient degree n; everything else
    sees only the divisor d.
    """

    tag: str
    primes: Optional[PrimeSet] = None
    r: int = 0
    rule: Optional[SubsetRule] = None
    table: tuple = field(default_factory=tuple)
    description: str = ""

    @classmethod
    def moebius(cls) -> "PsiSpec":
        return cls("moebius", description="Lie")

    @classmethod
    def totient(cls) -> "PsiSpec":
        return cls("totient", description="Conj")

    @classmethod
    def prime_set(cls, s: PrimeSet) -> "PsiSpec":
        if s.complement:
            return cls("prime_set_bar", primes=PrimeSet(s.primes), description=f"Lbar{s.describe()}")
        return cls("prime_set", primes=s, description=f"L{s.describe()}")

    @classmethod
    def foulkes(cls, r: int) -> "PsiSpec":
        if r < 1:
            raise ValueError("foulkes weight needs r >= 1")
        return cls("foulkes", r=r, description=f"Foulkes({r})")

    @classmethod
    def subset(cls, rule: SubsetRule) -> "PsiSpec":
        return cls("subset", rule=rule, description=f"fT({rule.describe()})")

    @classmethod
    def custom(cls, table: dict) -> "PsiSpec":
        items = tuple(sorted((int(d), Fraction(v)) for d, v in table.items()))
        return cls("custom", table=items, description="custom")

    def psi(self, d: int, n: int = 0) -> Fraction:
        """Weight of the divisor d (n only matters for the foulkes tag)."""
        if self.tag == "moebius":
            return Fraction(moebius(d))
        if self.tag == "totient":
            return Fraction(totient(d))
        if self.tag == "prime_set":
            q, ell = s_split(d, self.primes)
            return Fraction(totient(q) * moebius(ell))
        if self.tag == "prime_set_bar":
            q, ell = s_split(d, self.primes)
            return Fraction(totient(ell) * moebius(q))
        if self.tag == "foulkes":
            m = d // gcd(d, self.r)
            return Fraction(totient(d) * moebius(m), totient(m))
        if self.tag == "subset":
            return Fraction(
                sum(m * moebius(d // m) for m in divisors(d) if self.rule.contains(m))
            )
        for dd, v in self.table:
            if dd == d:
                return v
        return Fraction(0)

    @property
    def psi_one(self) -> Fraction:
        return self.psi(1, 1)


def from_psi(spec: PsiSpec, n: int) -> PowerSumPoly:
    """(1/n) * sum over d|n of psi(d) p_d^(n/d)."""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    terms = {}
    for d in divisors(n):
        c = spec.psi(d, n) / n
        if c:
            terms[Partition((d,) * (n // d))] = c
    return PowerSumPoly(terms, _trusted=True)


def lie(n: int) -> PowerSumPoly:
    return from_psi(PsiSpec.moebius(), n)


def conj(n: int) -> PowerSumPoly:
    return from_psi(PsiSpec.totient(), n)


def lie2(n: int) -> PowerSumPoly:
    return l_s(n, PrimeSet.of(2))


def lie_q(n: int, q: int) -> PowerSumPoly:
    """Single-prime variant: the prime-set family for {q}."""
    return l_s(n, PrimeSet.of(q))


def l_s(n: int, s: PrimeSet) -> PowerSumPoly:
    return from_psi(PsiSpec.prime_set(s), n)


def foulkes(n: int, r: int) -> PowerSumPoly:
    """Characteristic induced from the r-th power character of the long cycle."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return from_psi(PsiSpec.foulkes(r), n)


def f_T(n: int, rule: SubsetRule) -> PowerSumPoly:
    return from_psi(PsiSpec.subset(rule), n)


def family_by_name(name: str, **kwargs) -> PsiSpec:
    """Resolve the CLI-facing family names to a PsiSpec."""
    if name == "Lie":
        return PsiSpec.moebius()
    if name == "Conj":
        return PsiSpec.totient()
    if name == "Lie2":
        return PsiSpec.prime_set(PrimeSet.of(2))
    if name == "L":
        return PsiSpec.prime_set(kwargs["primes"])
    if name == "Lbar":
        return PsiSpec.prime_set(PrimeSet(kwargs["primes"].primes).bar)
    if name == "Foulkes":
        return PsiSpec.foulkes(kwargs["r"])
    if name == "fT":
        return PsiSpec.subset(kwargs["rule"])
    raise ValueError(f"unknown family {name!r}")
