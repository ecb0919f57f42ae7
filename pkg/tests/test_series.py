import random
from fractions import Fraction
from math import factorial

import pytest

from symfam.numtheory import PrimeSet, divisors, moebius
from symfam.partitions import Partition, partitions_of
from symfam.repmodules import PsiSpec, SubsetRule, from_psi, lie, lie2
from symfam.schur import from_schur
from symfam.series import (
    SymSeries,
    alt_transform,
    e_lambda,
    exp_series,
    family_series,
    family_values,
    graded_pleth,
    h_lambda,
    log_series,
    outer_apply,
    pleth_poly_series,
    plethystic_inverse,
    product_expansion,
    series_equal,
    standard_series,
)
from symfam.symfunc import PowerSumPoly, generator, omega, p1_derivative, plethysm

P1 = PowerSumPoly.p(1)


def pp(*parts):
    return Partition(parts)


def pseries(poly, n):
    return SymSeries.from_poly(poly, n)


def test_standard_series():
    H2 = standard_series("H", 2)
    assert H2.component(0) == PowerSumPoly.one()
    assert H2.component(1) == generator("h", 1)
    assert H2.component(2) == generator("h", 2)
    geom = standard_series("geom_p1", 3)
    assert geom.component(3) == PowerSumPoly.p_of(pp(1, 1, 1))
    prod = standard_series("Hpm", 10) * standard_series("E", 10)
    assert series_equal(prod, SymSeries.unit(10))
    prod = standard_series("H", 10) * standard_series("Epm", 10)
    assert series_equal(prod, SymSeries.unit(10))


def test_family_series():
    s = family_series(PsiSpec.moebius(), 3)
    assert s.component(1) == P1
    assert s.component(2) == lie(2)
    assert s.component(3) == lie(3)
    stripped = family_series(PsiSpec.moebius(), 3, strip_linear=True)
    assert stripped.component(1).is_zero()
    assert stripped.component(2) == lie(2)
    two = family_series(PsiSpec.prime_set(PrimeSet.of(2)), 2)
    assert two.component(2) == generator("h", 2)


def test_outer_apply_classics():
    geom = standard_series("geom_p1", 8)
    H = standard_series("H", 8)
    E = standard_series("E", 8)
    Lie = family_series(PsiSpec.moebius(), 8)
    Lie2 = family_series(PsiSpec.prime_set(PrimeSet.of(2)), 8)
    assert series_equal(outer_apply(H, Lie), geom)
    assert series_equal(outer_apply(E, Lie2), geom)
    # omega of E[Lie]: components are p_1^n + p_2 p_1^(n-2)
    got = outer_apply(E, Lie).omega()
    p2 = SymSeries.from_poly(PowerSumPoly.one() + PowerSumPoly.p(2), 8)
    assert series_equal(got, p2 * geom)
    with pytest.raises(ValueError):
        outer_apply(H, standard_series("H", 8))


def test_graded_pleth_table_rows():
    Lie = family_series(PsiSpec.moebius(), 5)
    Lie2 = family_series(PsiSpec.prime_set(PrimeSet.of(2)), 5)

    def schur_dict(poly, n):
        from symfam.schur import to_schur

        return {lam.parts: int(c) for lam, c in to_schur(poly, n).coeffs.items()}

    assert schur_dict(graded_pleth("h", 2, Lie, 4), 4) == {
        (3, 1): 1,
        (2, 2): 2,
        (2, 1, 1): 1,
        (1, 1, 1, 1): 1,
    }
    assert schur_dict(graded_pleth("e", 2, Lie2, 4), 4) == {
        (3, 1): 2,
        (2, 2): 1,
        (2, 1, 1): 1,
    }
    assert schur_dict(graded_pleth("e", 2, Lie2, 5), 5) == {
        (5,): 1,
        (4, 1): 2,
        (3, 2): 2,
        (3, 1, 1): 2,
        (2, 2, 1): 3,
        (2, 1, 1, 1): 1,
    }


def test_graded_pleth_matches_lambda_sums():
    # h_r[Q] restricted to degree n = sum of H_lambda[Q] over lambda of n with r parts
    Lie = family_series(PsiSpec.moebius(), 6)
    for n in range(1, 7):
        for r in range(1, n + 1):
            total = PowerSumPoly.zero()
            for lam in partitions_of(n):
                if lam.length == r:
                    total = total + h_lambda(Lie, lam)
            assert graded_pleth("h", r, Lie, n) == total
            total = PowerSumPoly.zero()
            for lam in partitions_of(n):
                if lam.length == r:
                    total = total + e_lambda(Lie, lam)
            assert graded_pleth("e", r, Lie, n) == total


def test_h_lambda_examples():
    Lie = family_series(PsiSpec.moebius(), 4)
    assert h_lambda(Lie, pp()) == PowerSumPoly.one()
    assert h_lambda(Lie, pp(1, 1, 1)) == generator("h", 3)
    total = PowerSumPoly.zero()
    for lam in partitions_of(4):
        total = total + h_lambda(Lie, lam)
    assert total == PowerSumPoly.p_of(pp(1, 1, 1, 1))


def test_alt_transform():
    Lie = family_series(PsiSpec.moebius(), 8)
    assert alt_transform(Lie).component(1) == P1
    H = standard_series("H", 8)
    got = outer_apply(H, alt_transform(Lie))
    expected = SymSeries.from_poly(PowerSumPoly.one() + P1, 8)
    assert series_equal(got, expected)
    E = standard_series("E", 8)
    Lie2 = family_series(PsiSpec.prime_set(PrimeSet.of(2)), 8)
    got = outer_apply(E, alt_transform(Lie2))
    assert series_equal(got, expected)


def test_product_expansion():
    got = product_expansion({n: -1 for n in range(1, 4)}, -1, 3)
    for n in range(4):
        expected = PowerSumPoly.zero()
        for lam in partitions_of(n):
            expected = expected + PowerSumPoly.p_of(lam)
        assert got.component(n) == expected
    got = product_expansion({1: -1, 2: -1, 4: -1}, -1, 4)
    assert got.component(4) == (
        PowerSumPoly.p_of(pp(4))
        + PowerSumPoly.p_of(pp(2, 2))
        + PowerSumPoly.p_of(pp(2, 1, 1))
        + PowerSumPoly.p_of(pp(1, 1, 1, 1))
    )
    # degree-4 piece of the odd-indexed (1+p_n) product: distinct odd parts only
    got = product_expansion({n: 1 for n in range(1, 5) if n % 2}, 1, 4)
    assert got.component(4) == PowerSumPoly.p_of(pp(3, 1))
    expected = PowerSumPoly.zero()
    for lam in partitions_of(4, distinct=True, odd_parts=True):
        expected = expected + PowerSumPoly.p_of(lam)
    assert got.component(4) == expected


def test_exp_log_inverse():
    rng = random.Random(11)
    for _ in range(10):
        comps = {0: PowerSumPoly.zero()}
        for d in range(1, 6):
            terms = {}
            for lam in partitions_of(d):
                if rng.random() < 0.4:
                    terms[lam] = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
            comps[d] = PowerSumPoly(terms)
        f = SymSeries.from_components(comps, 5)
        assert series_equal(log_series(exp_series(f)), f)


def test_plethystic_inverse_examples():
    f = pseries(P1 - PowerSumPoly.p(2), 8)
    inv = plethystic_inverse(f)
    expected = pseries(P1 + PowerSumPoly.p(2) + PowerSumPoly.p(4) + PowerSumPoly.p(8), 8)
    assert series_equal(inv, expected)

    Hm1 = standard_series("H", 7).strip_constant()
    got = plethystic_inverse(Hm1)
    expected = alt_transform(family_series(PsiSpec.moebius(), 7))
    assert series_equal(got, expected)

    # p1/(1+p1) and p1/(1-p1)
    f = SymSeries.from_components(
        {d: PowerSumPoly.p_of(Partition((1,) * d)).scale((-1) ** (d - 1)) for d in range(1, 8)},
        7,
    )
    g = standard_series("geom_p1", 7).strip_constant()
    assert series_equal(plethystic_inverse(f), g)
    assert series_equal(plethystic_inverse(g), f)


def test_plethystic_inverse_two_sided():
    Lie2 = family_series(PsiSpec.prime_set(PrimeSet.of(2)), 7)
    inv = plethystic_inverse(Lie2)
    p1_series = pseries(P1, 7)
    assert series_equal(outer_apply(inv, Lie2), p1_series)
    assert series_equal(outer_apply(Lie2, inv), p1_series)
    with pytest.raises(ValueError):
        plethystic_inverse(pseries(PowerSumPoly.p(2), 5))


def test_meta_products_for_families():
    """The four generating-function identities, families vs products, degree 10."""
    N = 10
    specs = [
        PsiSpec.moebius(),
        PsiSpec.totient(),
        PsiSpec.prime_set(PrimeSet.of(2)),
        PsiSpec.prime_set(PrimeSet.of(3)),
        PsiSpec.foulkes(2),
        PsiSpec.foulkes(3),
    ]
    H = standard_series("H", N)
    E = standard_series("E", N)
    for spec in specs:
        F = family_series(spec, N)
        v1 = family_values(spec, 1, N)
        vm1 = family_values(spec, -1, N)
        assert series_equal(
            outer_apply(H, F), product_expansion({m: -v1[m] for m in v1}, -1, N)
        )
        assert series_equal(
            outer_apply(E, F), product_expansion({m: vm1[m] for m in vm1}, -1, N)
        )
        assert series_equal(
            outer_apply(H, alt_transform(F)),
            product_expansion({m: v1[m] for m in v1}, 1, N),
        )
        assert series_equal(
            outer_apply(E, alt_transform(F)),
            product_expansion({m: -vm1[m] for m in vm1}, 1, N),
        )


def _random_schur_positive(rng, max_deg, trunc):
    comps = {}
    for d in range(1, max_deg + 1):
        poly = PowerSumPoly.zero()
        for lam in partitions_of(d):
            if rng.random() < 0.3:
                poly = poly + from_schur(lam).scale(rng.randint(1, 2))
        comps[d] = poly
    if comps.get(1, PowerSumPoly.zero()).is_zero():
        comps[1] = P1
    return SymSeries.from_components(comps, trunc)


def test_pm_lemma_random():
    # H[F] = G iff Epm[F] = 1/G iff sum (-1)^(r-1) e_r[F] = (G-1)/G; mirror too
    rng = random.Random(424242)
    N = 10
    H = standard_series("H", N)
    E = standard_series("E", N)
    Epm = standard_series("Epm", N)
    Hpm = standard_series("Hpm", N)
    for _ in range(6):
        F = _random_schur_positive(rng, 6, N)
        G = outer_apply(H, F)
        assert series_equal(outer_apply(Epm, F), G.inverse())
        lhs = outer_apply(Epm.scale(-1) + SymSeries.unit(N), F)
        assert series_equal(lhs, (G - SymSeries.unit(N)) * G.inverse())
        K = outer_apply(E, F)
        assert series_equal(outer_apply(Hpm, F), K.inverse())


def test_pmalt_lemma_random():
    # H[alt(G)] = K iff H[G] = 1/(omega(K) sign-alternated); mirror for E
    rng = random.Random(31337)
    N = 10
    H = standard_series("H", N)
    E = standard_series("E", N)
    for _ in range(4):
        G = _random_schur_positive(rng, 6, N)
        K = outer_apply(H, alt_transform(G))
        assert series_equal(outer_apply(H, G), K.omega().sign_alternate().inverse())
        K = outer_apply(E, alt_transform(G))
        assert series_equal(outer_apply(E, G), K.omega().sign_alternate().inverse())


def test_ge2_reduction():
    # H[F_ge2] = Epm * H[F]; E[F_ge2] = Hpm * E[F]  (degree-1 term must be p_1)
    N = 10
    for spec in (PsiSpec.moebius(), PsiSpec.prime_set(PrimeSet.of(2)), PsiSpec.totient()):
        F = family_series(spec, N)
        F2 = F.ge2()
        H = standard_series("H", N)
        E = standard_series("E", N)
        assert series_equal(
            outer_apply(H, F2), standard_series("Epm", N) * outer_apply(H, F)
        )
        assert series_equal(
            outer_apply(E, F2), standard_series("Hpm", N) * outer_apply(E, F)
        )


def test_restrict_recurrences():
    # d/dp1 G(n-j, n) = G(n-j-1, n-1) + p1 * d/dp1 G(n-j, n-1) for h and e outer
    N = 9
    for spec in (PsiSpec.moebius(), PsiSpec.prime_set(PrimeSet.of(2))):
        F = family_series(spec, N)
        for kind in ("h", "e"):
            table = {}
            for n in range(N + 1):
                for j in range(n + 1):
                    table[(j, n)] = graded_pleth(kind, j, F, n)
            for n in range(2, N + 1):
                for j in range(n):
                    lhs = p1_derivative(table[(n - j, n)])
                    rhs = table.get((n - 1 - j, n - 1), PowerSumPoly.zero()) + P1 * p1_derivative(
                        table[(n - j, n - 1)] if n - j <= n - 1 else PowerSumPoly.zero()
                    )
                    assert lhs == rhs, (spec.description, kind, n, j)


def test_restrict_ge2_recurrences():
    N = 9
    for spec in (PsiSpec.moebius(), PsiSpec.prime_set(PrimeSet.of(2))):
        F2 = family_series(spec, N).ge2()
        for kind in ("h", "e"):
            table = {}
            for n in range(N + 1):
                for j in range(n + 1):
                    table[(j, n)] = graded_pleth(kind, j, F2, n)
            for n in range(3, N + 1):
                for j in range(1, n):
                    lhs = p1_derivative(table[(n - j, n)])
                    inner = (
                        table[(n - j, n - 1)] if n - j <= n - 1 else PowerSumPoly.zero()
                    )
                    prev = table.get((n - j - 1, n - 2), PowerSumPoly.zero())
                    rhs = P1 * (p1_derivative(inner) + prev)
                    assert lhs == rhs, (spec.description, kind, n, j)


def _brute_cycle_counts(n):
    from itertools import permutations

    c = {}
    d = {}
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        fixed = 0
        for i in range(n):
            if not seen[i]:
                cycles += 1
                j = i
                length = 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length == 1:
                    fixed += 1
        c[cycles] = c.get(cycles, 0) + 1
        if fixed == 0:
            d[cycles] = d.get(cycles, 0) + 1
    return c, d


def c_count(n, j):
    # permutations of n with j cycles
    memo = {}

    def rec(n, j):
        if n == 0:
            return 1 if j == 0 else 0
        if j < 1:
            return 0
        if (n, j) not in memo:
            memo[(n, j)] = rec(n - 1, j - 1) + (n - 1) * rec(n - 1, j)
        return memo[(n, j)]

    return rec(n, j)


def d_count(n, j):
    # derangements of n with j cycles
    memo = {}

    def rec(n, j):
        if n == 0:
            return 1 if j == 0 else 0
        if n == 1 or j < 1:
            return 0
        if (n, j) not in memo:
            memo[(n, j)] = (n - 1) * (rec(n - 1, j) + rec(n - 2, j - 1))
        return memo[(n, j)]

    return rec(n, j)


def test_cycle_count_recurrences_vs_brute_force():
    for n in range(1, 8):
        c, d = _brute_cycle_counts(n)
        for j in range(1, n + 1):
            assert c.get(j, 0) == c_count(n, j)
            assert d.get(j, 0) == d_count(n, j)


def test_dimension_bookkeeping():
    from symfam.symfunc import dimension

    N = 9
    Lie = family_series(PsiSpec.moebius(), N)
    Lie_ge2 = Lie.ge2()
    for n in range(1, N + 1):
        for j in range(1, n + 1):
            assert dimension(graded_pleth("h", j, Lie, n), n) == c_count(n, j)
            assert dimension(graded_pleth("h", j, Lie_ge2, n), n) == d_count(n, j)


def test_pleth_poly_series():
    Lie = family_series(PsiSpec.moebius(), 6)
    got = pleth_poly_series(generator("h", 2), Lie)
    for n in range(7):
        assert got.component(n) == graded_pleth("h", 2, Lie, n)


def test_series_inverse_guards():
    with pytest.raises(ValueError):
        family_series(PsiSpec.moebius(), 5).inverse()
    s = standard_series("H", 5)
    assert series_equal(s * s.inverse(), SymSeries.unit(5))
