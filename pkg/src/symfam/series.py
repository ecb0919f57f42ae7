"""Truncated formal series of symmetric functions and the plethystic calculus.

A SymSeries holds homogeneous components for degrees 0..trunc. Binary
operations truncate at the smaller order. exp/log run the usual formal
recursions with exact rationals; plethystic inversion solves degree by degree
against the linear term.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional

from .partitions import Partition, partitions_of
from .repmodules import PsiSpec, from_psi
from .symfunc import (
    EMPTY,
    PowerSumPoly,
    generator,
    omega,
    p_transform,
    plethysm,
    specialize_t,
)


class SymSeries:
    """Graded components (degree 0..trunc) of a formal sum of symmetric functions."""

    __slots__ = ("components", "trunc")

    def __init__(self, components: Iterable[PowerSumPoly], trunc: int):
        comps = list(components)
        if len(comps) != trunc + 1:
            raise ValueError("need exactly trunc+1 components")
        for d, c in enumerate(comps):
            if any(lam.size != d for lam in c.terms):
                raise ValueError(f"component {d} is not homogeneous of degree {d}")
        self.components = tuple(comps)
        self.trunc = trunc

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(trunc: int) -> "SymSeries":
        return SymSeries([PowerSumPoly.zero()] * (trunc + 1), trunc)

    @staticmethod
    def unit(trunc: int) -> "SymSeries":
        comps = [PowerSumPoly.zero()] * (trunc + 1)
        comps[0] = PowerSumPoly.one()
        return SymSeries(comps, trunc)

    @staticmethod
    def from_poly(f: PowerSumPoly, trunc: int) -> "SymSeries":
        comps = [f.homogeneous_component(d) for d in range(trunc + 1)]
        return SymSeries(comps, trunc)

    @staticmethod
    def from_components(by_degree: dict, trunc: int) -> "SymSeries":
        comps = [by_degree.get(d, PowerSumPoly.zero()) for d in range(trunc + 1)]
        return SymSeries(comps, trunc)

    # -- structure ---------------------------------------------------------

    def component(self, d: int) -> PowerSumPoly:
        if d < 0:
            return PowerSumPoly.zero()
        if d > self.trunc:
            raise IndexError(f"degree {d} beyond truncation order {self.trunc}")
        return self.components[d]

    def to_poly(self) -> PowerSumPoly:
        out = PowerSumPoly.zero()
        for c in self.components:
            out = out + c
        return out

    def retrunc(self, n: int) -> "SymSeries":
        if n <= self.trunc:
            return SymSeries(self.components[: n + 1], n)
        raise ValueError(f"cannot extend truncation {self.trunc} to {n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymSeries)
            and self.trunc == other.trunc
            and self.components == other.components
        )

    def __repr__(self):
        return f"SymSeries(trunc={self.trunc}, {self.to_poly()!r})"

    # -- arithmetic --------------------------------------------------------

    def _zip(self, other: "SymSeries", op) -> "SymSeries":
        n = min(self.trunc, other.trunc)
        return SymSeries(
            [op(self.components[d], other.components[d]) for d in range(n + 1)], n
        )

    def __add__(self, other: "SymSeries") -> "SymSeries":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "SymSeries":
        return SymSeries([-c for c in self.components], self.trunc)

    def scale(self, c) -> "SymSeries":
        return SymSeries([comp.scale(c) for comp in self.components], self.trunc)

    def __mul__(self, other: "SymSeries") -> "SymSeries":
        n = min(self.trunc, other.trunc)
        out = [PowerSumPoly.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.components[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.components[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return SymSeries(out, n)

    def mul_poly(self, f: PowerSumPoly) -> "SymSeries":
        return self * SymSeries.from_poly(f, self.trunc)

    def inverse(self) -> "SymSeries":
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        c0 = self.components[0].coeff(EMPTY)
        if not c0:
            raise ValueError("series is not invertible: zero constant term")
        n = self.trunc
        inv = [PowerSumPoly.zero() for _ in range(n + 1)]
        inv[0] = PowerSumPoly.scalar(1 / c0)
        for d in range(1, n + 1):
            acc = PowerSumPoly.zero()
            for i in range(1, d + 1):
                acc = acc + self.components[i] * inv[d - i]
            inv[d] = acc.scale(-1 / c0)
        return SymSeries(inv, n)

    def divide(self, other: "SymSeries") -> "SymSeries":
        return self * other.inverse()

    # -- transforms --------------------------------------------------------

    def map_components(self, fn: Callable[[int, PowerSumPoly], PowerSumPoly]) -> "SymSeries":
        return SymSeries(
            [fn(d, c) for d, c in enumerate(self.components)], self.trunc
        )

    def omega(self) -> "SymSeries":
        return self.map_components(lambda d, c: omega(c))

    def ge2(self) -> "SymSeries":
        """Drop the components of degree below 2."""
        return self.map_components(
            lambda d, c: c if d >= 2 else PowerSumPoly.zero()
        )

    def strip_constant(self) -> "SymSeries":
        return self.map_components(lambda d, c: c if d >= 1 else PowerSumPoly.zero())

    def sign_alternate(self) -> "SymSeries":
        """Component n scaled by (-1)^n (the t -> -t substitution)."""
        return self.map_components(lambda d, c: c.scale(-1) if d % 2 else c)

    def p_transform(self, k: int) -> "SymSeries":
        """Plethysm by p_k on the left: indices scaled by k."""
        out = [PowerSumPoly.zero() for _ in range(self.trunc + 1)]
        for d, c in enumerate(self.components):
            if d * k <= self.trunc:
                out[d * k] = p_transform(c, k)
        return SymSeries(out, self.trunc)

    def has_constant_term(self) -> bool:
        return not self.components[0].is_zero()


def alt_transform(f: SymSeries) -> SymSeries:
    """Component n becomes (-1)^(n-1) * omega(component n)."""
    return f.map_components(
        lambda d, c: omega(c) if d % 2 else -omega(c)
    )


def standard_series(kind: str, trunc: int) -> SymSeries:
    """The named series: H, E, their alternating-sign variants, or sum of p_1^n."""
    if kind in ("H", "E"):
        comps = [generator("h" if kind == "H" else "e", d) for d in range(trunc + 1)]
    elif kind in ("Hpm", "Epm"):
        g = "h" if kind == "Hpm" else "e"
        comps = [
            generator(g, d).scale(-1) if d % 2 else generator(g, d)
            for d in range(trunc + 1)
        ]
    elif kind == "geom_p1":
        comps = [
            PowerSumPoly({Partition((1,) * d): Fraction(1)}) if d else PowerSumPoly.one()
            for d in range(trunc + 1)
        ]
    else:
        raise ValueError(f"unknown standard series {kind!r}")
    return SymSeries(comps, trunc)


def family_series(spec: PsiSpec, trunc: int, strip_linear: bool = False) -> SymSeries:
    """Sum of the psi-family members for degrees 1..trunc."""
    if trunc < 1:
        raise ValueError("family series needs trunc >= 1")
    comps = [PowerSumPoly.zero()]
    for n in range(1, trunc + 1):
        comps.append(from_psi(spec, n))
    if strip_linear:
        comps[1] = PowerSumPoly.zero()
    return SymSeries(comps, trunc)


def pleth_poly_series(f: PowerSumPoly, g: SymSeries) -> SymSeries:
    """f[G] for a finite f and a truncated series G with no constant term."""
    if g.has_constant_term():
        raise ValueError("plethysm requires a series with zero constant term")
    n = g.trunc
    result = plethysm(f, g.to_poly(), n)
    return SymSeries.from_poly(result, n)


def outer_apply(outer: SymSeries, f: SymSeries) -> SymSeries:
    """Sum over r of outer_r[F], truncated at min(outer.trunc, F.trunc).

    Realizes H[F], E[F], the signed variants, and any series-by-series
    plethysm with F lacking a constant term (outer_r[F] has valuation >= r).
    """
    if f.has_constant_term():
        raise ValueError("outer_apply requires the inner series to have no constant term")
    n = min(outer.trunc, f.trunc)
    inner = f.retrunc(n) if f.trunc != n else f
    inner_poly = inner.to_poly()
    acc = PowerSumPoly.zero()
    for r in range(n + 1):
        piece = outer.component(r)
        if piece.is_zero():
            continue
        acc = acc + plethysm(piece, inner_poly, n)
    return SymSeries.from_poly(acc, n)


def graded_pleth(outer_kind: str, r: int, f: SymSeries, n: int) -> PowerSumPoly:
    """Degree-n component of h_r[F] or e_r[F]."""
    if outer_kind not in ("h", "e"):
        raise ValueError("outer_kind must be 'h' or 'e'")
    if n > f.trunc:
        raise ValueError(f"degree {n} beyond series truncation {f.trunc}")
    if f.has_constant_term():
        raise ValueError("graded_pleth requires a series with no constant term")
    out = plethysm(generator(outer_kind, r), f.to_poly(), n)
    return out.homogeneous_component(n)


def _lambda_product(q: SymSeries, lam: Partition, kind: str) -> PowerSumPoly:
    if not lam.parts:
        return PowerSumPoly.one()
    out = PowerSumPoly.one()
    for i, m in sorted(lam.multiplicities().items()):
        qi = q.component(i)
        block = plethysm(generator(kind, m), qi, m * i)
        out = out * block
    return out


def h_lambda(q: SymSeries, lam: Partition) -> PowerSumPoly:
    """Product over distinct part sizes i of h_{m_i}[q_i]."""
    return _lambda_product(q, lam, "h")


def e_lambda(q: SymSeries, lam: Partition) -> PowerSumPoly:
    """Product over distinct part sizes i of e_{m_i}[q_i]."""
    return _lambda_product(q, lam, "e")


def exp_series(f: SymSeries, n: Optional[int] = None) -> SymSeries:
    """exp of a series with zero constant term."""
    if f.has_constant_term():
        raise ValueError("exp needs zero constant term")
    n = f.trunc if n is None else n
    f = f.retrunc(n) if f.trunc > n else f
    out = SymSeries.unit(n)
    power = SymSeries.unit(n)
    for k in range(1, n + 1):
        power = power * f
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def log_series(g: SymSeries, n: Optional[int] = None) -> SymSeries:
    """log of a series with constant term 1."""
    n = g.trunc if n is None else n
    g = g.retrunc(n) if g.trunc > n else g
    if g.components[0] != PowerSumPoly.one():
        raise ValueError("log needs constant term exactly 1")
    x = g.strip_constant()
    out = SymSeries.zeros(n)
    power = SymSeries.unit(n)
    for k in range(1, n + 1):
        power = power * x
        out = out + power.scale(Fraction((-1) ** (k - 1), k))
    return out


def product_expansion(exponents: dict, sign: int, trunc: int) -> SymSeries:
    """Product over n of (1 + sign*p_n)^(c_n), truncated.

    exponents maps n -> c_n (exact rationals allowed); sign is +1 or -1.
    Computed through exp(sum of c_n log(1 + sign*p_n)).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    log_acc = SymSeries.zeros(trunc)
    comps = list(log_acc.components)
    for n, c in exponents.items():
        c = Fraction(c)
        if not c or n > trunc:
            continue
        j = 1
        while n * j <= trunc:
            # log(1+s*p_n) = sum_j (-1)^(j-1) s^j p_(n^j) / j
            coeff = c * Fraction((-1) ** (j - 1) * sign**j, j)
            lam = Partition((n,) * j)
            comps[n * j] = comps[n * j] + PowerSumPoly({lam: coeff})
            j += 1
    return exp_series(SymSeries(comps, trunc))


def geometric_factor(values: Iterable[int], sign: int, power: int, trunc: int) -> SymSeries:
    """Convenience: product over the listed n of (1 + sign*p_n)^power."""
    return product_expansion({n: power for n in values}, sign, trunc)


def plethystic_inverse(f: SymSeries) -> SymSeries:
    """G with F[G] = p_1 = G[F] up to the truncation order.

    Solved degree by degree; the degree-n correction is linear because the
    degree-1 component of F is a nonzero multiple of p_1.
    """
    if f.has_constant_term():
        raise ValueError("plethystic inverse needs zero constant term")
    p1 = Partition((1,))
    lin = f.component(1)
    c1 = lin.coeff(p1)
    if not c1 or len(lin.terms) != 1:
        raise ValueError("plethystic inverse needs degree-1 component c*p_1, c != 0")
    n = f.trunc
    f_poly = f.to_poly()
    g = [PowerSumPoly.zero() for _ in range(n + 1)]
    if n >= 1:
        g[1] = PowerSumPoly({p1: 1 / c1})
    target = PowerSumPoly.p(1) if n >= 1 else PowerSumPoly.zero()
    for d in range(2, n + 1):
        current = plethysm(f_poly, sum_components(g, d), d)
        defect = (target - current).homogeneous_component(d)
        g[d] = defect.scale(1 / c1)
    return SymSeries(g, n)


def sum_components(comps: list, upto: int) -> PowerSumPoly:
    out = PowerSumPoly.zero()
    for d, c in enumerate(comps):
        if d <= upto:
            out = out + c
    return out


def family_values(spec: PsiSpec, t, trunc: int) -> dict[int, Fraction]:
    """The one-variable specializations f_m(t) for m = 1..trunc."""
    return {m: specialize_t(from_psi(spec, m), t) for m in range(1, trunc + 1)}


def series_equal(a: SymSeries, b: SymSeries, upto: Optional[int] = None) -> bool:
    n = min(a.trunc, b.trunc) if upto is None else upto
    if n > a.trunc or n > b.trunc:
        raise ValueError("comparison degree beyond truncation")
    return all(a.component(d) == b.component(d) for d in range(n + 1))
