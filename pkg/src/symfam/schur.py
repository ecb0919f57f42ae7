"""Conversion between the power-sum and Schur bases, and Schur-positivity verdicts.

Character values of the symmetric group are computed by the border-strip
(Murnaghan-Nakayama) recursion on beta-number sets, memoized globally. This is
deliberately the only conversion path; orthogonality tests validate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .partitions import Partition, partitions_of, z_of
from .symfunc import PowerSumPoly

_char_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    """First-column hook lengths: strictly decreasing beta numbers."""
    ell = len(parts)
    return tuple(parts[i] + (ell - 1 - i) for i in range(ell))


def _partition_from_beta(betas: list[int]) -> tuple[int, ...]:
    betas = sorted(betas, reverse=True)
    ell = len(betas)
    parts = (b - (ell - 1 - i) for i, b in enumerate(betas))
    return tuple(a for a in parts if a > 0)


def _char_rec(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    k = mu[0]
    rest = mu[1:]
    betas = _beta_set(lam)
    beta_lookup = set(betas)
    total = 0
    for i, b in enumerate(betas):
        if b < k or (b - k) in beta_lookup:
            continue
        # strip height = number of beta numbers strictly between b-k and b
        height = sum(1 for b2 in betas if b - k < b2 < b)
        new = list(betas)
        new[i] = b - k
        sub = _partition_from_beta(new)
        val = _char_rec(sub, rest)
        total += -val if height % 2 else val
    _char_memo[key] = total
    return total


def char_value(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam(mu)."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |{mu}| = {mu.size}")
    return _char_rec(lam.parts, mu.parts)


@dataclass(frozen=True)
class SchurExpansion:
    """Schur coefficients of one homogeneous component."""

    coeffs: dict
    degree: int

    def coeff(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def sorted_items(self):
        return [(lam, self.coeffs[lam]) for lam in sorted(self.coeffs)]

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*s{lam}" for lam, c in self.sorted_items())


def to_schur(f: PowerSumPoly, n: int) -> SchurExpansion:
    """Schur expansion of the degree-n component of f."""
    component = f.homogeneous_component(n)
    coeffs: dict[Partition, Fraction] = {}
    support = list(component.terms.items())
    for lam in partitions_of(n):
        total = Fraction(0)
        for mu, c in support:
            chi = char_value(lam, mu)
            if chi:
                total += c * chi
        if total:
            coeffs[lam] = total
    return SchurExpansion(coeffs, n)


def from_schur(lam: Partition) -> PowerSumPoly:
    """s_lam in the power-sum basis: sum over mu of chi^lam(mu) p_mu / z_mu."""
    terms = {}
    for mu in partitions_of(lam.size):
        chi = char_value(lam, mu)
        if chi:
            terms[mu] = Fraction(chi, z_of(mu))
    return PowerSumPoly(terms, _trusted=True)


@dataclass(frozen=True)
class PositivityVerdict:
    positive: bool
    witness: Optional[tuple] = None  # (Partition, Fraction), most negative coefficient

    def __bool__(self):
        return self.positive


def is_schur_positive(f: PowerSumPoly, n: int) -> PositivityVerdict:
    """Every Schur coefficient of the degree-n component nonnegative?

    The witness is the first partition in canonical order ((n) first) among
    those carrying the most negative coefficient.
    """
    exp = to_schur(f, n)
    negatives = [(lam, c) for lam, c in exp.coeffs.items() if c < 0]
    if not negatives:
        return PositivityVerdict(True)
    worst = min(c for _, c in negatives)
    lam = min(lam for lam, c in negatives if c == worst)
    return PositivityVerdict(False, (lam, worst))
