import pytest

from symfam.numtheory import PrimeSet, divisors, factorize, is_prime, moebius, s_split, totient


def brute_moebius(n):
    # inclusion-exclusion over squarefree divisor structure
    if n == 1:
        return 1
    primes = [p for p, e in factorize(n)]
    if any(e > 1 for _, e in factorize(n)):
        return 0
    return (-1) ** len(primes)


def test_moebius_values():
    assert moebius(1) == 1
    assert moebius(12) == 0
    assert moebius(30) == brute_moebius(30) == -1
    for n in range(1, 200):
        assert moebius(n) == brute_moebius(n)


def test_totient_values():
    from math import gcd

    assert totient(1) == 1
    assert totient(7) == 6
    assert totient(12) == sum(1 for k in range(1, 13) if gcd(k, 12) == 1) == 4


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(7) == [1, 7]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    for n in range(1, 100):
        trial = [d for d in range(1, n + 1) if n % d == 0]
        assert divisors(n) == trial


def test_domain_errors():
    for bad in (0, -3):
        with pytest.raises(ValueError):
            moebius(bad)
        with pytest.raises(ValueError):
            totient(bad)
        with pytest.raises(ValueError):
            divisors(bad)


def test_divisor_sums_classical():
    for n in range(1, 10001):
        assert sum(totient(d) for d in divisors(n)) == n
    for n in range(1, 10001):
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_s_split():
    assert s_split(24, PrimeSet.of(2)) == (8, 3)
    assert s_split(7, PrimeSet.of(2)) == (1, 7)
    assert s_split(10, PrimeSet()) == (1, 10)
    # recombination and coprimality of the parts
    s = PrimeSet.of(2, 3)
    for n in range(1, 500):
        q, ell = s_split(n, s)
        assert q * ell == n
        assert all(p in (2, 3) for p, _ in factorize(q))
        assert all(p not in (2, 3) for p, _ in factorize(ell))


def test_s_split_complement():
    sbar = PrimeSet.of(2).bar  # every prime except 2
    q, ell = s_split(12, sbar)
    assert (q, ell) == (3, 4)


def test_primeset_validation():
    with pytest.raises(ValueError):
        PrimeSet((4,))
    with pytest.raises(ValueError):
        PrimeSet((3, 2))
    assert PrimeSet.of(3, 2).primes == (2, 3)
    assert PrimeSet.of(2).contains(2)
    assert not PrimeSet.of(2).contains(3)
    assert PrimeSet.of(2).bar.contains(3)
    assert not PrimeSet.of(2).bar.contains(2)
    assert PrimeSet.of(2).admits(8)
    assert not PrimeSet.of(2).admits(12)
    assert PrimeSet.of(2).admits(1)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19]
    assert [n for n in range(2, 21) if is_prime(n)] == primes
