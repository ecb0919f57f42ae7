"""The graded ring of symmetric functions over exact rationals, in the power-sum basis.

A PowerSumPoly is a finitely supported map Partition -> Fraction giving the
coefficients of the p_lambda. Power sums are the only internal basis; the
complete homogeneous and elementary generators exist at construction time and
the Schur basis at the display boundary (see schur.py). Plethysm of truncated
series must state its truncation degree explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Optional

from .partitions import Partition, partitions_of, z_of

EMPTY = Partition(())


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class PowerSumPoly:
    """Symmetric function with exact rational coefficients on power-sum monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None, _trusted: bool = False):
        if terms is None:
            terms = {}
        if _trusted:
            self.terms = terms
            return
        clean: dict[Partition, Fraction] = {}
        for lam, c in terms.items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            c = _as_fraction(c)
            if c:
                clean[lam] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "PowerSumPoly":
        return PowerSumPoly({}, _trusted=True)

    @staticmethod
    def one() -> "PowerSumPoly":
        return PowerSumPoly({EMPTY: Fraction(1)}, _trusted=True)

    @staticmethod
    def scalar(c) -> "PowerSumPoly":
        c = _as_fraction(c)
        return PowerSumPoly({EMPTY: c} if c else {}, _trusted=True)

    @staticmethod
    def p(n: int) -> "PowerSumPoly":
        if n < 1:
            raise ValueError("p_n requires n >= 1")
        return PowerSumPoly({Partition((n,)): Fraction(1)}, _trusted=True)

    @staticmethod
    def p_of(lam: Partition) -> "PowerSumPoly":
        return PowerSumPoly({lam: Fraction(1)}, _trusted=True)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam: Partition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def degrees(self) -> list[int]:
        return sorted({lam.size for lam in self.terms})

    def max_degree(self) -> int:
        return max((lam.size for lam in self.terms), default=0)

    def homogeneous_component(self, n: int) -> "PowerSumPoly":
        return PowerSumPoly(
            {lam: c for lam, c in self.terms.items() if lam.size == n}, _trusted=True
        )

    def is_homogeneous(self) -> bool:
        return len({lam.size for lam in self.terms}) <= 1

    def truncate(self, n: int) -> "PowerSumPoly":
        return PowerSumPoly(
            {lam: c for lam, c in self.terms.items() if lam.size <= n}, _trusted=True
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSumPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms):
            c = self.terms[lam]
            bits.append(f"{c}*p{lam}" if lam.parts else f"{c}")
        return " + ".join(bits)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, Fraction(0)) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return PowerSumPoly(out, _trusted=True)

    def __sub__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        return self + (-other)

    def __neg__(self) -> "PowerSumPoly":
        return PowerSumPoly({lam: -c for lam, c in self.terms.items()}, _trusted=True)

    def scale(self, c) -> "PowerSumPoly":
        c = _as_fraction(c)
        if not c:
            return PowerSumPoly.zero()
        return PowerSumPoly({lam: c * v for lam, v in self.terms.items()}, _trusted=True)

    def mul(self, other: "PowerSumPoly", trunc: Optional[int] = None) -> "PowerSumPoly":
        out: dict[Partition, Fraction] = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                if trunc is not None and lam.size + mu.size > trunc:
                    continue
                key = lam.union(mu)
                s = out.get(key, Fraction(0)) + a * b
                if s:
                    out[key] = s
                else:
                    del out[key]
        return PowerSumPoly(out, _trusted=True)

    def __mul__(self, other: "PowerSumPoly") -> "PowerSumPoly":
        return self.mul(other)


def multiply(f: PowerSumPoly, g: PowerSumPoly, trunc: Optional[int] = None) -> PowerSumPoly:
    return f.mul(g, trunc)


@lru_cache(maxsize=None)
def generator(kind: str, n: int) -> PowerSumPoly:
    """The generators p_n, h_n, e_n expanded into the power-sum basis."""
    if kind == "p":
        return PowerSumPoly.p(n)
    if kind not in ("h", "e"):
        raise ValueError(f"unknown generator kind {kind!r}")
    if n < 0:
        raise ValueError("generator degree must be nonnegative")
    if n == 0:
        return PowerSumPoly.one()
    terms = {}
    for lam in partitions_of(n):
        c = Fraction(1, z_of(lam))
        if kind == "e" and (n - lam.length) % 2:
            c = -c
        terms[lam] = c
    return PowerSumPoly(terms, _trusted=True)


def h_of(lam: Partition) -> PowerSumPoly:
    out = PowerSumPoly.one()
    for a in lam.parts:
        out = out * generator("h", a)
    return out


def e_of(lam: Partition) -> PowerSumPoly:
    out = PowerSumPoly.one()
    for a in lam.parts:
        out = out * generator("e", a)
    return out


def omega(f: PowerSumPoly) -> PowerSumPoly:
    """Sign-twist involution: p_lambda scaled by (-1)^(|lambda| - length)."""
    out = {}
    for lam, c in f.terms.items():
        out[lam] = -c if (lam.size - lam.length) % 2 else c
    return PowerSumPoly(out, _trusted=True)


def p_transform(f: PowerSumPoly, k: int) -> PowerSumPoly:
    """Plethysm p_k[f]: every index multiplied by k, coefficients unchanged."""
    if k == 1:
        return f
    return PowerSumPoly({lam.scale(k): c for lam, c in f.terms.items()}, _trusted=True)


def plethysm(f: PowerSumPoly, g: PowerSumPoly, trunc: int) -> PowerSumPoly:
    """f[g], truncated at the stated degree.

    g must have no degree-0 term. Truncation is mandatory because callers
    routinely pass truncated series for g; for exact finite inputs pass
    f.max_degree() * g.max_degree().
    """
    if g.coeff(EMPTY):
        raise ValueError("plethysm requires the inner function to have no constant term")
    cache: dict[int, PowerSumPoly] = {}

    def transformed(k: int) -> PowerSumPoly:
        if k not in cache:
            cache[k] = p_transform(g, k).truncate(trunc)
        return cache[k]

    out = PowerSumPoly.zero()
    for mu, c in f.terms.items():
        if mu.size > trunc:
            # g has positive valuation, so p_mu[g] has degree >= |mu|
            continue
        piece = PowerSumPoly.scalar(c)
        for a in mu.parts:
            piece = piece.mul(transformed(a), trunc)
            if piece.is_zero():
                break
        out = out + piece
    return out


def hall_inner_product(f: PowerSumPoly, g: PowerSumPoly) -> Fraction:
    """<p_lambda, p_mu> = delta * z_lambda, extended bilinearly."""
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = Fraction(0)
    for lam, a in small.terms.items():
        b = large.terms.get(lam)
        if b:
            total += a * b * z_of(lam)
    return total


def p1_derivative(f: PowerSumPoly) -> PowerSumPoly:
    """Formal d/dp_1; the restriction operator on characteristics."""
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms.items():
        m1 = sum(1 for a in lam.parts if a == 1)
        if not m1:
            continue
        key = lam.remove_one_part(1)
        s = out.get(key, Fraction(0)) + m1 * c
        if s:
            out[key] = s
        else:
            del out[key]
    return PowerSumPoly(out, _trusted=True)


def specialize_t(f: PowerSumPoly, t) -> Fraction:
    """Substitute every p_d -> t in a homogeneous symmetric function."""
    if not f.is_homogeneous():
        raise ValueError("specialize_t needs a homogeneous input; apply per component")
    t = _as_fraction(t)
    total = Fraction(0)
    for lam, c in f.terms.items():
        total += c * t**lam.length
    return total


def dimension(f: PowerSumPoly, n: int) -> Fraction:
    """n! times the coefficient of p_(1^n): the dimension of the degree-n piece."""
    if n == 0:
        return f.coeff(EMPTY)
    ones = Partition((1,) * n)
    return factorial(n) * f.coeff(ones)
