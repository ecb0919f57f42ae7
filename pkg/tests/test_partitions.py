from math import factorial

import pytest

from symfam.partitions import (
    Partition,
    conjugate,
    count_partitions,
    partition_from_str,
    partitions_of,
    z_of,
)


def test_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition(()).size == 0
    assert Partition((3, 1)).size == 4
    assert Partition((3, 1)).length == 2


def test_text_roundtrip():
    for parts in [(), (4,), (3, 1), (2, 2, 1)]:
        lam = Partition(parts)
        assert partition_from_str(str(lam)) == lam
    assert str(Partition(())) == "[]"
    assert str(Partition((2, 1, 1))) == "[2,1,1]"
    with pytest.raises(ValueError):
        partition_from_str("[2,]")


def test_reverse_lex_order():
    got = [lam.parts for lam in partitions_of(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    # first is (n), last is (1^n)
    for n in range(1, 9):
        seq = list(partitions_of(n))
        assert seq[0].parts == (n,)
        assert seq[-1].parts == (1,) * n
        # canonical sort order agrees with the enumeration order
        assert seq == sorted(seq)


def test_counts_match_partition_numbers():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [count_partitions(n) for n in range(11)] == expected


def test_filters():
    got = {lam.parts for lam in partitions_of(4, power_of=2)}
    assert got == {(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    got = {lam.parts for lam in partitions_of(6, distinct=True, power_of=2)}
    assert got == {(4, 2)}
    got = {lam.parts for lam in partitions_of(6, odd_parts=True)}
    assert got == {(5, 1), (3, 3), (3, 1, 1, 1), (1,) * 6}
    got = {lam.parts for lam in partitions_of(6, parts_in={1, 3})}
    assert got == {(3, 3), (3, 1, 1, 1), (1,) * 6}
    got = {lam.parts for lam in partitions_of(5, parts_in=lambda a: a != 2)}
    assert all(2 not in p for p in got)


def test_z_values():
    assert z_of(Partition((1, 1, 1))) == 6
    assert z_of(Partition((3,))) == 3
    assert z_of(Partition((2, 1, 1))) == 4


def test_class_equation():
    for n in range(1, 13):
        assert sum(factorial(n) // z_of(lam) for lam in partitions_of(n)) == factorial(n)


def test_conjugate():
    assert conjugate(Partition((5,))).parts == (1,) * 5
    assert conjugate(Partition((3, 1))).parts == (2, 1, 1)
    assert conjugate(Partition((2, 2))).parts == (2, 2)
    for n in range(13):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_multiplicities_and_ops():
    lam = Partition((3, 2, 2, 1))
    assert lam.multiplicities() == {3: 1, 2: 2, 1: 1}
    assert lam.scale(2).parts == (6, 4, 4, 2)
    assert Partition((2,)).union(Partition((3, 1))).parts == (3, 2, 1)
    assert Partition((2, 1)).remove_one_part(1).parts == (2,)
