"""Sieve construction and multiplicative function tests."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eisencount.arith import (build_sieve, euler_phi, factorize, mobius,
                              mobius_table, omega, phi_bounded, radical, tau,
                              totient_table)
from eisencount.errors import BudgetExceededError


def test_build_sieve_small_table():
    s = build_sieve(10)
    expected = {2: 2, 3: 3, 4: 2, 5: 5, 6: 2, 7: 7, 8: 2, 9: 3, 10: 2}
    for n, p in expected.items():
        assert s.spf[n] == p
    assert s.primes.tolist() == [2, 3, 5, 7]


def test_build_sieve_minimal_limit():
    s = build_sieve(2)
    assert s.primes.tolist() == [2]
    assert s.limit == 2


def test_build_sieve_prime_count_at_million(big_sieve):
    assert big_sieve.prime_count() == 78498


def test_build_sieve_rejects_bad_limits():
    with pytest.raises(ValueError):
        build_sieve(1)
    with pytest.raises(BudgetExceededError):
        build_sieve(10**9)
    with pytest.raises(BudgetExceededError):
        build_sieve(5000, max_limit=4999)


def test_sieve_structural_invariants(sieve):
    spf = sieve.spf
    ns = np.arange(2, sieve.limit + 1)
    assert np.all(ns % spf[2:] == 0), "spf entries must divide their index"
    # spf[n] == n exactly on the primes, and the prime list matches.
    fixed = ns[spf[2:] == ns]
    assert fixed.tolist() == sieve.primes.tolist()
    assert np.all(np.diff(sieve.primes) > 0)


def test_sieve_arrays_are_read_only(sieve):
    with pytest.raises(ValueError):
        sieve.spf[2] = 99
    with pytest.raises(ValueError):
        sieve.primes[0] = 1


def test_nth_prime(big_sieve):
    assert big_sieve.nth_prime(1) == 2
    assert big_sieve.nth_prime(25) == 97
    assert big_sieve.nth_prime(10000) == 104729
    with pytest.raises(ValueError):
        big_sieve.nth_prime(0)
    with pytest.raises(ValueError):
        big_sieve.nth_prime(big_sieve.prime_count() + 1)


def test_factorize_cases(sieve):
    assert factorize(1, sieve).pairs == ()
    assert factorize(12, sieve).pairs == ((2, 2), (3, 1))
    assert factorize(97, sieve).pairs == ((97, 1),)


def test_factorize_roundtrip_exhaustive(sieve):
    for n in range(1, 2001):
        f = factorize(n, sieve)
        assert f.value() == n
        primes = [p for p, _ in f.pairs]
        assert primes == sorted(set(primes))


def test_range_checks(sieve):
    for fn in (factorize, mobius, euler_phi, omega, radical, tau):
        with pytest.raises(ValueError):
            fn(0, sieve)
        with pytest.raises(ValueError):
            fn(sieve.limit + 1, sieve)


def test_mobius_cases(sieve):
    assert mobius(1, sieve) == 1
    assert mobius(2, sieve) == -1
    assert mobius(6, sieve) == 1
    assert mobius(12, sieve) == 0


def test_euler_phi_cases(sieve):
    assert euler_phi(1, sieve) == 1
    assert euler_phi(7, sieve) == 6
    assert euler_phi(12, sieve) == 4


def test_omega_and_radical_and_tau(sieve):
    assert omega(1, sieve) == 0
    assert omega(12, sieve) == 2
    assert omega(30, sieve) == 3
    assert radical(1, sieve) == 1
    assert radical(12, sieve) == 6
    assert radical(8, sieve) == 2
    assert tau(1, sieve) == 1
    assert tau(12, sieve) == 6
    assert tau(97, sieve) == 2


def _divisors(n, sieve):
    divs = [1]
    for p, e in factorize(n, sieve).pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def test_mobius_over_divisors_identity(sieve):
    # sum of mu(d)/d over d | n equals phi(n)/n, in exact rationals
    for n in range(1, 301):
        total = sum(Fraction(mobius(d, sieve), d) for d in _divisors(n, sieve))
        assert total == Fraction(euler_phi(n, sieve), n)


def test_abs_mobius_sum_counts_squarefree_divisors(sieve):
    for n in range(1, 301):
        total = sum(abs(mobius(d, sieve)) for d in _divisors(n, sieve))
        assert total == 2 ** omega(n, sieve)


def test_two_power_omega_below_tau_to_a_million(big_sieve):
    spf = big_sieve.spf.tolist()
    for n in range(2, 10**6 + 1):
        m = n
        t = 1
        w = 0
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            w += 1
            t *= e + 1
        if (1 << w) > t:
            pytest.fail(f"2^omega exceeds tau at n={n}")
    # the inline walk agrees with the public functions on a sample
    for n in (2, 97, 360, 4096, 30030, 999983):
        assert tau(n, big_sieve) >= 2 ** omega(n, big_sieve)


def test_phi_bounded_examples(sieve):
    assert phi_bounded(1, 5, sieve) == 11
    assert phi_bounded(6, 10, sieve) == 6
    assert phi_bounded(2, 0, sieve) == 0
    assert phi_bounded(2, 5, sieve) == 6


def test_phi_bounded_rejects_bad_args(sieve):
    with pytest.raises(ValueError):
        phi_bounded(0, 5, sieve)
    with pytest.raises(ValueError):
        phi_bounded(2, -1, sieve)


def test_phi_bounded_matches_cycle_counting(sieve):
    # Independent route: coprime residues repeat with period s, so count
    # whole cycles plus a prefix, then mirror to negative a.
    for s in range(1, 201):
        coprime = [math.gcd(r, s) == 1 for r in range(s)]
        prefix = [0]
        for r in range(1, s):
            prefix.append(prefix[-1] + coprime[r])
        phi_s = euler_phi(s, sieve)
        for H in range(0, 201):
            positive = (H // s) * phi_s + prefix[H % s]
            expected = 2 * positive + (1 if s == 1 else 0)
            assert phi_bounded(s, H, sieve) == expected


@given(s=st.integers(min_value=2, max_value=9999),
       H=st.integers(min_value=0, max_value=10**6))
def test_phi_bounded_always_even_for_s_at_least_2(s, H, sieve):
    assert phi_bounded(s, H, sieve) % 2 == 0


@settings(max_examples=60)
@given(n=st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip_random(n, big_sieve):
    assert factorize(n, big_sieve).value() == n


def test_multiplicativity_on_coprime_pairs(big_sieve):
    # phi and mu are multiplicative; check every coprime pair up to 1000
    n = np.arange(1, 1001)
    gcds = np.gcd.outer(n, n)
    phi = totient_table(10**6, big_sieve)
    mu = mobius_table(10**6, big_sieve)
    prod = np.outer(n, n)
    coprime = gcds == 1
    assert np.array_equal(phi[prod][coprime],
                          np.outer(phi[n], phi[n])[coprime])
    assert np.array_equal(mu[prod][coprime],
                          np.outer(mu[n], mu[n])[coprime])


def test_tables_match_pointwise_functions(sieve):
    mu = mobius_table(10**4, sieve)
    phi = totient_table(10**4, sieve)
    assert mu[0] == 0 and phi[0] == 0
    for n in range(1, 10**4 + 1):
        assert mu[n] == mobius(n, sieve)
        assert phi[n] == euler_phi(n, sieve)


def test_tables_reject_limits_beyond_sieve(sieve):
    with pytest.raises(ValueError):
        mobius_table(sieve.limit + 1, sieve)
    with pytest.raises(ValueError):
        totient_table(sieve.limit + 1, sieve)
