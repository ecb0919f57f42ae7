from fractions import Fraction

import pytest

from symfam.numtheory import PrimeSet
from symfam.partitions import Partition, partitions_of, z_of
from symfam.repmodules import conj, foulkes, l_s, lie, lie2
from symfam.schur import char_value, from_schur, is_schur_positive, to_schur
from symfam.symfunc import PowerSumPoly, generator


def pp(*parts):
    return Partition(parts)


def test_char_values_small():
    assert char_value(pp(2, 1), pp(1, 1, 1)) == 2
    assert char_value(pp(2, 1), pp(3)) == -1
    assert char_value(pp(4), pp(2, 2)) == 1
    with pytest.raises(ValueError):
        char_value(pp(2, 1), pp(2, 2))


def test_trivial_and_sign_characters():
    for n in range(1, 8):
        for mu in partitions_of(n):
            assert char_value(pp(n), mu) == 1
            assert char_value(Partition((1,) * n), mu) == (-1) ** (n - mu.length)


def test_s5_character_table_row():
    # dimension column: chi^lam(1^n) equals the number of standard tableaux
    from symfam.tableaux import syt_count

    for n in range(1, 9):
        ones = Partition((1,) * n)
        for lam in partitions_of(n):
            assert char_value(lam, ones) == syt_count(lam)


def test_column_orthogonality():
    for n in range(1, 9):
        lams = list(partitions_of(n))
        for mu in lams:
            for nu in lams:
                total = sum(char_value(lam, mu) * char_value(lam, nu) for lam in lams)
                assert total == (z_of(mu) if mu == nu else 0)


def test_to_schur_examples():
    assert to_schur(lie(4), 4).coeffs == {pp(3, 1): 1, pp(2, 1, 1): 1}
    assert to_schur(lie2(4), 4).coeffs == {pp(4): 1, pp(2, 2): 1, pp(2, 1, 1): 1}
    got = to_schur(PowerSumPoly.p(4), 4).coeffs
    assert got == {pp(4): 1, pp(3, 1): -1, pp(2, 1, 1): 1, pp(1, 1, 1, 1): -1}


def test_power_sum_hook_expansion():
    # p_n = alternating sum of hooks s_(n-r,1^r)
    for n in range(1, 9):
        got = to_schur(PowerSumPoly.p(n), n).coeffs
        expected = {}
        for r in range(n):
            expected[Partition((n - r,) + (1,) * r)] = Fraction((-1) ** r)
        assert got == expected


def test_from_schur():
    assert from_schur(pp(3)) == generator("h", 3)
    assert from_schur(pp(1, 1, 1)) == generator("e", 3)
    third = Fraction(1, 3)
    assert from_schur(pp(2, 1)).terms == {pp(1, 1, 1): third, pp(3): -third}


def test_roundtrip():
    for n in range(9):
        for lam in partitions_of(n):
            exp = to_schur(from_schur(lam), n)
            assert exp.coeffs == {lam: 1}


def test_positivity_examples():
    assert is_schur_positive(lie2(6), 6).positive
    verdict = is_schur_positive(PowerSumPoly.p(4), 4)
    assert not verdict.positive
    assert verdict.witness == (pp(3, 1), Fraction(-1))
    lifted = PowerSumPoly.p(1) * lie2(3) - lie2(4)
    verdict = is_schur_positive(lifted, 4)
    assert not verdict.positive
    assert verdict.witness == (pp(4), Fraction(-1))


def test_families_have_nonneg_integer_schur_coeffs():
    specs = [lie, conj, lie2]
    for n in range(1, 11):
        for make in specs:
            exp = to_schur(make(n), n)
            assert exp.is_integral()
            assert all(c >= 0 for c in exp.coeffs.values())
    for n in range(1, 11):
        for s in (PrimeSet.of(3), PrimeSet.of(2, 3), PrimeSet.of(2).bar):
            exp = to_schur(l_s(n, s), n)
            assert exp.is_integral()
            assert all(c >= 0 for c in exp.coeffs.values())
    for n in range(1, 9):
        for r in range(1, n + 1):
            exp = to_schur(foulkes(n, r), n)
            assert exp.is_integral()
            assert all(c >= 0 for c in exp.coeffs.values())
