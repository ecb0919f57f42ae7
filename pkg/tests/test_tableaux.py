import pytest

from symfam.partitions import Partition, partitions_of
from symfam.schur import char_value
from symfam.tableaux import StandardTableau, descents, foulkes_oracle, maj, syt_count, syt_enumerate


def pp(*parts):
    return Partition(parts)


def test_counts():
    assert syt_count(pp(4)) == 1
    assert syt_count(pp(2, 2)) == 2
    assert syt_count(pp(2, 1)) == 2


def test_counts_match_dimensions():
    for n in range(1, 9):
        ones = Partition((1,) * n)
        for lam in partitions_of(n):
            assert syt_count(lam) == char_value(lam, ones)


def test_enumeration_is_deterministic_and_valid():
    for lam in partitions_of(6):
        seen = set()
        first = list(syt_enumerate(lam))
        second = list(syt_enumerate(lam))
        assert first == second
        for t in first:
            assert t.shape() == lam
            flat = [v for row in t.rows for v in row]
            assert sorted(flat) == list(range(1, lam.size + 1))
            for row in t.rows:
                assert all(row[i] < row[i + 1] for i in range(len(row) - 1))
            for i in range(len(t.rows) - 1):
                upper, lower = t.rows[i], t.rows[i + 1]
                assert all(upper[j] < lower[j] for j in range(len(lower)))
            assert t not in seen
            seen.add(t)


def test_maj():
    assert maj(StandardTableau(((1, 2, 3, 4, 5),))) == 0
    assert maj(StandardTableau(((1,), (2,), (3,), (4,)))) == 6
    t = StandardTableau(((1, 3), (2, 4)))
    assert descents(t) == [1, 3]
    assert maj(t) == 4


def test_oracle_examples():
    assert foulkes_oracle(pp(2, 2), 4, 4) == 1
    assert foulkes_oracle(pp(3, 1), 2, 4) == 1
    assert foulkes_oracle(pp(5), 5, 5) == 1
    with pytest.raises(ValueError):
        foulkes_oracle(pp(2, 2), 1, 5)
    with pytest.raises(ValueError):
        foulkes_oracle(pp(2, 2), 0, 4)


def test_oracle_totals():
    for n in range(1, 9):
        for lam in partitions_of(n):
            total = sum(foulkes_oracle(lam, r, n) for r in range(1, n + 1))
            assert total == syt_count(lam)
