import random
from fractions import Fraction

import pytest

from symfam.partitions import Partition, partitions_of, z_of
from symfam.schur import from_schur
from symfam.repmodules import lie
from symfam.symfunc import (
    PowerSumPoly,
    dimension,
    generator,
    hall_inner_product,
    h_of,
    multiply,
    omega,
    p1_derivative,
    plethysm,
    specialize_t,
)

P = PowerSumPoly.p_of
half = Fraction(1, 2)


def pp(*parts):
    return Partition(parts)


def test_generators():
    assert generator("h", 2).terms == {pp(1, 1): half, pp(2): half}
    assert generator("e", 2).terms == {pp(1, 1): half, pp(2): -half}
    assert generator("h", 0) == PowerSumPoly.one()
    assert generator("e", 0) == PowerSumPoly.one()
    with pytest.raises(ValueError):
        generator("p", 0)
    # average of the trivial character: all coefficients 1/z
    h4 = generator("h", 4)
    for lam in partitions_of(4):
        assert h4.coeff(lam) == Fraction(1, z_of(lam))


def test_multiply():
    assert P(pp(2)) * P(pp(1)) == P(pp(2, 1))
    h1 = generator("h", 1)
    assert h1 * h1 == P(pp(1, 1))
    e2sq = generator("e", 2) * generator("e", 2)
    assert e2sq.terms == {
        pp(1, 1, 1, 1): Fraction(1, 4),
        pp(2, 1, 1): -half,
        pp(2, 2): Fraction(1, 4),
    }
    # truncation drops high terms
    assert multiply(P(pp(2)), P(pp(3)), trunc=4).is_zero()


def test_omega():
    assert omega(generator("h", 3)) == generator("e", 3)
    assert omega(P(pp(2))) == P(pp(2)).scale(-1)
    f = lie(4)
    assert omega(omega(f)) == f
    # ring homomorphism on random elements of degree <= 8
    rng = random.Random(20240811)
    for _ in range(40):
        f = _random_poly(rng, 8)
        g = _random_poly(rng, 8)
        assert omega(f * g) == omega(f) * omega(g)
        assert omega(f + g) == omega(f) + omega(g)


def _random_poly(rng, max_deg):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        n = rng.randint(1, max_deg)
        lam = rng.choice(list(partitions_of(n)))
        terms[lam] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return PowerSumPoly(terms)


def test_plethysm_basics():
    assert plethysm(P(pp(2)), P(pp(3)), 6) == P(pp(6))
    assert plethysm(generator("h", 3), PowerSumPoly.p(1), 3) == generator("h", 3)
    with pytest.raises(ValueError):
        plethysm(generator("h", 2), PowerSumPoly.one(), 4)


def test_plethysm_h2_e2():
    got = plethysm(generator("h", 2), generator("e", 2), 4)
    expected = from_schur(pp(2, 2)) + from_schur(pp(1, 1, 1, 1))
    assert got == expected


def test_plethysm_associativity_random():
    rng = random.Random(77)
    for _ in range(30):
        f = _random_poly(rng, 3)
        g = _random_poly(rng, 2)
        k = _random_poly(rng, 2)
        g = g - PowerSumPoly.scalar(g.coeff(Partition(())))
        k = k - PowerSumPoly.scalar(k.coeff(Partition(())))
        if g.is_zero() or k.is_zero():
            continue
        lhs = plethysm(f, plethysm(g, k, 12), 12)
        rhs = plethysm(plethysm(f, g, 12), k, 12)
        assert lhs == rhs


def test_plethysm_sum_rule():
    # h_n[G1+G2] = sum over k of h_k[G1] h_(n-k)[G2]
    rng = random.Random(99)
    for n in range(1, 6):
        g1 = _random_poly(rng, 3).truncate(3)
        g2 = _random_poly(rng, 3).truncate(3)
        g1 = g1 - PowerSumPoly.scalar(g1.coeff(Partition(())))
        g2 = g2 - PowerSumPoly.scalar(g2.coeff(Partition(())))
        lhs = plethysm(generator("h", n), g1 + g2, 3 * n)
        rhs = PowerSumPoly.zero()
        for k in range(n + 1):
            rhs = rhs + plethysm(generator("h", k), g1, 3 * n) * plethysm(
                generator("h", n - k), g2, 3 * n
            )
        assert lhs == rhs.truncate(3 * n)


def test_hall_inner_product():
    assert hall_inner_product(P(pp(2, 1)), P(pp(2, 1))) == 2
    assert hall_inner_product(generator("h", 4), generator("h", 4)) == 1
    assert hall_inner_product(P(pp(3)), P(pp(2, 1))) == 0
    rng = random.Random(5)
    for _ in range(20):
        f = _random_poly(rng, 6)
        g = _random_poly(rng, 6)
        assert hall_inner_product(f, g) == hall_inner_product(g, f)
        assert hall_inner_product(omega(f), omega(g)) == hall_inner_product(f, g)


def test_hpm_e_is_one():
    # sum over r of (-1)^r h_r times sum of e_s has only a constant term, degree <= 12
    total = PowerSumPoly.zero()
    for r in range(13):
        hr = generator("h", r).scale((-1) ** r)
        for s in range(13 - r):
            total = total + hr * generator("e", s)
    for n in range(1, 13):
        assert total.homogeneous_component(n).is_zero()
    assert total.coeff(Partition(())) == 1
    # and the mirror identity with the signs on e
    total = PowerSumPoly.zero()
    for r in range(13):
        er = generator("e", r).scale((-1) ** r)
        for s in range(13 - r):
            total = total + er * generator("h", s)
    for n in range(1, 13):
        assert total.homogeneous_component(n).is_zero()


def test_p1_derivative():
    assert p1_derivative(P(pp(1, 1, 1))) == P(pp(1, 1)).scale(3)
    assert p1_derivative(P(pp(2))).is_zero()
    ones = Partition((1,) * 3)
    assert p1_derivative(lie(4)) == P(ones)


def test_specialize():
    assert specialize_t(lie(4), 1) == 0
    assert specialize_t(lie(1), 1) == 1
    from symfam.repmodules import lie2

    assert specialize_t(lie2(4), 1) == 1
    with pytest.raises(ValueError):
        specialize_t(generator("h", 1) + generator("h", 2), 1)


def test_dimension():
    assert dimension(lie(5), 5) == 24
    assert dimension(generator("h", 4), 4) == 1
    hl = plethysm(generator("h", 2), lie(1) + lie(2) + lie(3), 4)
    assert dimension(hl, 4) == 11


def test_h_of_product():
    assert h_of(pp(2, 1)) == generator("h", 2) * generator("h", 1)
