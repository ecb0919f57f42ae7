from fractions import Fraction

import pytest

from symfam.numtheory import PrimeSet, divisors
from symfam.partitions import Partition
from symfam.repmodules import (
    PsiSpec,
    SubsetRule,
    conj,
    f_T,
    family_by_name,
    foulkes,
    from_psi,
    l_s,
    lie,
    lie2,
    lie_q,
)
from symfam.schur import to_schur
from symfam.symfunc import PowerSumPoly, generator, omega, plethysm, specialize_t

quarter = Fraction(1, 4)


def pp(*parts):
    return Partition(parts)


def test_from_psi_examples():
    assert from_psi(PsiSpec.moebius(), 2) == generator("e", 2)
    assert from_psi(PsiSpec.totient(), 4).terms == {
        pp(1, 1, 1, 1): quarter,
        pp(2, 2): quarter,
        pp(4): Fraction(1, 2),
    }
    assert from_psi(PsiSpec.moebius(), 4).terms == {
        pp(1, 1, 1, 1): quarter,
        pp(2, 2): -quarter,
    }
    with pytest.raises(ValueError):
        from_psi(PsiSpec.moebius(), 0)


def test_lie2_case_analysis():
    assert lie2(3) == lie(3)
    assert lie2(4) == conj(4)
    assert lie2(6) == omega(lie(6))
    for n in range(1, 25):
        if n % 2 == 1:
            assert lie2(n) == lie(n)
        elif (n & (n - 1)) == 0:
            assert lie2(n) == conj(n)
        elif (n // 2) % 2 == 1:
            assert lie2(n) == omega(lie(n))


def test_l_s_extremes():
    assert l_s(5, PrimeSet()) == lie(5)
    assert l_s(5, PrimeSet().bar) == conj(5)
    assert specialize_t(l_s(12, PrimeSet.of(2)), 1) == 0
    assert specialize_t(l_s(8, PrimeSet.of(2)), 1) == 1


def test_l_s_lie_or_conj_cases():
    s = PrimeSet.of(2, 5)
    for n in range(1, 30):
        if s.admits(n):
            assert l_s(n, s) == conj(n)
        elif all(not s.contains(p) for p in (2, 5) if n % p == 0):
            assert l_s(n, s) == lie(n)


def test_foulkes():
    assert foulkes(6, 1) == lie(6)
    assert foulkes(6, 6) == conj(6)
    assert to_schur(foulkes(4, 2), 4).coeffs == {
        pp(3, 1): 1,
        pp(2, 2): 1,
        pp(1, 1, 1, 1): 1,
    }
    with pytest.raises(ValueError):
        foulkes(4, 5)
    with pytest.raises(ValueError):
        foulkes(4, 0)


def test_foulkes_sum_is_regular():
    from math import factorial

    for n in range(1, 9):
        total = PowerSumPoly.zero()
        for r in range(1, n + 1):
            total = total + foulkes(n, r)
        assert total == PowerSumPoly.p_of(Partition((1,) * n))


def test_f_T_examples():
    assert f_T(6, SubsetRule.explicit([1])) == lie(6)
    assert f_T(5, SubsetRule.everything()) == conj(5)
    expected = lie(4) + plethysm(lie(2), PowerSumPoly.p(2), 4)
    assert f_T(4, SubsetRule.explicit([1, 2])) == expected


def test_f_T_value_at_one_iff_member():
    rules = [
        SubsetRule.explicit([1, 4, 5]),
        SubsetRule.up_to(3),
        SubsetRule.divisors_of(12),
        SubsetRule.one_mod(3),
        SubsetRule.powers_of(2),
        SubsetRule.coprime_to([2, 3]),
        SubsetRule.everything(),
    ]
    for rule in rules:
        for n in range(1, 21):
            expected = Fraction(1) if rule.contains(n) else Fraction(0)
            assert specialize_t(f_T(n, rule), 1) == expected


def test_parity_relation_between_values():
    specs = [
        PsiSpec.moebius(),
        PsiSpec.totient(),
        PsiSpec.prime_set(PrimeSet.of(2)),
        PsiSpec.prime_set(PrimeSet.of(3)),
        PsiSpec.prime_set(PrimeSet.of(2).bar),
        PsiSpec.foulkes(3),
        PsiSpec.subset(SubsetRule.up_to(4)),
    ]
    for spec in specs:
        vals1 = {m: specialize_t(from_psi(spec, m), 1) for m in range(1, 21)}
        valsm1 = {m: specialize_t(from_psi(spec, m), -1) for m in range(1, 21)}
        for m in range(1, 21):
            if m % 2 == 1:
                assert valsm1[m] == -vals1[m]
            else:
                assert valsm1[m] == vals1[m // 2] - vals1[m]


def _p_s_membership(s: PrimeSet, n: int) -> bool:
    return s.admits(n)


def test_values_at_one_for_prime_sets():
    sets = [PrimeSet(), PrimeSet.of(2), PrimeSet.of(3), PrimeSet.of(2, 3), PrimeSet.of(5)]
    for s in sets:
        for n in range(1, 25):
            v = specialize_t(l_s(n, s), 1)
            assert v == (1 if s.admits(n) else 0)
            vbar = specialize_t(l_s(n, s.bar), 1)
            assert vbar == (1 if s.bar.admits(n) else 0)


def test_values_at_minus_one_case_table():
    sets = [PrimeSet(), PrimeSet.of(2), PrimeSet.of(3), PrimeSet.of(2, 3), PrimeSet.of(5)]
    for s in sets:
        two_in = s.contains(2)
        for n in range(1, 25):
            v = specialize_t(l_s(n, s), -1)
            in_ps = s.admits(n)
            if not two_in:
                if in_ps:
                    expected = -1
                elif n % 2 == 0 and s.admits(n // 2):
                    expected = 1
                else:
                    expected = 0
            else:
                expected = -1 if (n % 2 == 1 and in_ps) else 0
            assert v == expected, (s.describe(), n)


def test_foulkes_psi_allows_large_r():
    # the series path needs weights with r exceeding the degree
    spec = PsiSpec.foulkes(6)
    for m in range(1, 7):
        expected = Fraction(1) if 6 % m == 0 else Fraction(0)
        assert specialize_t(from_psi(spec, m), 1) == expected


def test_family_by_name():
    assert family_by_name("Lie") == PsiSpec.moebius()
    assert family_by_name("Conj") == PsiSpec.totient()
    assert from_psi(family_by_name("Lie2"), 4) == lie2(4)
    assert from_psi(family_by_name("L", primes=PrimeSet.of(3)), 9) == lie_q(9, 3)
    bar = family_by_name("Lbar", primes=PrimeSet.of(2))
    assert from_psi(bar, 6) == l_s(6, PrimeSet.of(2).bar)
    assert from_psi(family_by_name("Foulkes", r=2), 4) == foulkes(4, 2)
    rule = SubsetRule.divisors_of(6)
    assert from_psi(family_by_name("fT", rule=rule), 6) == f_T(6, rule)
    with pytest.raises(ValueError):
        family_by_name("nope")


def test_custom_psi():
    spec = PsiSpec.custom({1: 1, 2: -1})
    f2 = from_psi(spec, 2)
    assert f2 == generator("e", 2)
    assert spec.psi_one == 1
