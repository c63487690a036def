"""Sieve-backed multiplicative arithmetic functions.

A smallest-prime-factor table (:class:`ArithSieve`) supports O(log n)
factorization, from which the Moebius function, Euler totient, distinct
prime count, divisor count and radical follow directly.  The module also
provides :func:`phi_bounded`, the exact count of integers in a symmetric
interval coprime to a modulus, which is the basic building block of the
polynomial counting formulas, plus bulk table versions of mu and phi for
callers that sweep a contiguous range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError

DEFAULT_SIEVE_LIMIT = 10**7

# Hard cap on sieve size: int32 spf entries, so ~400 MB at the cap.
MAX_SIEVE_LIMIT = 10**8


# eq=False: identity comparison and hashing; the arrays make field-wise
# equality both expensive and unhashable.
@dataclass(frozen=True, eq=False)
class ArithSieve:
    """Smallest-prime-factor table for 2..limit plus the prime list.

    Attributes
    ----------
    limit : int
        Largest integer covered by the table.
    spf : numpy.ndarray
        ``spf[n]`` is the least prime dividing n for every 2 <= n <= limit.
        Entries 0 and 1 are unused and hold 0.
    primes : numpy.ndarray
        All primes <= limit in ascending order.

    Both arrays are marked read-only, so a sieve can be shared freely
    across threads.
    """

    limit: int
    spf: np.ndarray
    primes: np.ndarray

    def prime_count(self) -> int:
        """Number of primes available from this sieve."""
        return int(self.primes.size)

    def nth_prime(self, n: int) -> int:
        """The n-th prime (1-indexed), if covered by the sieve."""
        if not 1 <= n <= self.primes.size:
            raise ValueError(
                f"sieve holds {self.primes.size} primes, cannot serve prime #{n}"
            )
        return int(self.primes[n - 1])


def build_sieve(limit: int = DEFAULT_SIEVE_LIMIT, *,
                max_limit: int = MAX_SIEVE_LIMIT) -> ArithSieve:
    """Build a smallest-prime-factor sieve covering 2..limit.

    Parameters
    ----------
    limit : int
        Inclusive upper end of the table, at least 2.
    max_limit : int, optional
        Memory budget expressed as the largest acceptable ``limit``.

    Returns
    -------
    ArithSieve

    Raises
    ------
    ValueError
        If ``limit < 2``.
    BudgetExceededError
        If ``limit > max_limit``.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be at least 2, got {limit}")
    if limit > max_limit:
        raise BudgetExceededError(
            f"sieve limit {limit} exceeds the memory budget {max_limit}"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p:: p]
            block[block == 0] = p
    # Everything still unmarked above 1 is prime.
    unmarked = np.flatnonzero(spf[2:] == 0) + 2
    spf[unmarked] = unmarked
    primes = np.flatnonzero(spf[2:] == np.arange(2, limit + 1, dtype=np.int32)) + 2
    spf.flags.writeable = False
    primes.flags.writeable = False
    return ArithSieve(limit=limit, spf=spf, primes=primes)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        """The integer this factorization multiplies back to."""
        out = 1
        for p, e in self.pairs:
            out *= p ** e
        return out


def _check_range(n: int, sieve: ArithSieve) -> None:
    if not 1 <= n <= sieve.limit:
        raise ValueError(f"{n} outside sieve range 1..{sieve.limit}")


def _prime_exponents(n: int, spf: np.ndarray) -> Iterator[tuple[int, int]]:
    """Yield (prime, exponent) pairs of n in ascending prime order."""
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        yield p, e


def factorize(n: int, sieve: ArithSieve) -> Factorization:
    """Factor n using the sieve; factorize(1) has an empty pair list."""
    _check_range(n, sieve)
    return Factorization(tuple(_prime_exponents(n, sieve.spf)))


def mobius(n: int, sieve: ArithSieve) -> int:
    """Moebius function: (-1)^(distinct primes) if square-free, else 0."""
    _check_range(n, sieve)
    sign = 1
    for _p, e in _prime_exponents(n, sieve.spf):
        if e > 1:
            return 0
        sign = -sign
    return sign


def euler_phi(n: int, sieve: ArithSieve) -> int:
    """Euler totient: count of 1 <= k <= n coprime to n."""
    _check_range(n, sieve)
    result = n
    for p, _e in _prime_exponents(n, sieve.spf):
        result -= result // p
    return result


def omega(n: int, sieve: ArithSieve) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    _check_range(n, sieve)
    return sum(1 for _ in _prime_exponents(n, sieve.spf))


def tau(n: int, sieve: ArithSieve) -> int:
    """Number of divisors, computed from the factorization on demand."""
    t = 1
    for _p, e in factorize(n, sieve).pairs:
        t *= e + 1
    return t


def radical(n: int, sieve: ArithSieve) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    _check_range(n, sieve)
    r = 1
    for p, _e in _prime_exponents(n, sieve.spf):
        r *= p
    return r


def phi_bounded(s: int, H: int, sieve: ArithSieve) -> int:
    """Exact count of integers a with ``|a| <= H`` and ``gcd(a, s) = 1``.

    Evaluates the signed divisor sum over the square-free divisors t of s,

        sum of mu(t) * (2*floor(H/t) + 1),

    which is inclusion-exclusion over the primes of s.  The divisor set
    has 2^omega(s) elements, so the cost is tiny even for large s.

    With the convention gcd(0, s) = s, the value a = 0 is counted only
    when s = 1; in particular phi_bounded(s, 0) = 0 for all s >= 2.
    """
    if H < 0:
        raise ValueError(f"H must be non-negative, got {H}")
    _check_range(s, sieve)
    signed_divisors = [(1, 1)]
    for p, _e in _prime_exponents(s, sieve.spf):
        signed_divisors += [(t * p, -sign) for t, sign in signed_divisors]
    return sum(sign * (2 * (H // t) + 1) for t, sign in signed_divisors)


def _primes_upto(limit: int, sieve: ArithSieve) -> np.ndarray:
    cut = int(np.searchsorted(sieve.primes, limit, side="right"))
    return sieve.primes[:cut]


def mobius_table(limit: int, sieve: ArithSieve) -> np.ndarray:
    """Vector of mu(n) for 0 <= n <= limit; mu[0] is set to 0.

    Bulk variant of :func:`mobius` for callers that need every value in
    a range, built by sign flips over prime progressions and zeroing of
    square multiples.
    """
    _check_range(max(limit, 1), sieve)
    mu = np.ones(limit + 1, dtype=np.int64)
    for p in _primes_upto(limit, sieve).tolist():
        mu[p:: p] *= -1
        pp = p * p
        if pp <= limit:
            mu[pp:: pp] = 0
    mu[0] = 0
    return mu


def totient_table(limit: int, sieve: ArithSieve) -> np.ndarray:
    """Vector of phi(n) for 0 <= n <= limit; phi[0] is set to 0."""
    _check_range(max(limit, 1), sieve)
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in _primes_upto(limit, sieve).tolist():
        phi[p:: p] -= phi[p:: p] // p
    phi[0] = 0
    return phi
