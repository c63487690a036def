"""Density constants for Eisenstein polynomials, with rigorous brackets.

The proportion of monic integer polynomials of degree d that are
Eisenstein tends to a constant theta_d as the height bound grows, and
likewise rho_d when the leading coefficient varies too.  Both admit an
Euler product and an equivalent alternating series:

    theta_d = 1 - prod over primes p of (1 - (p-1)/p^(d+1))
            = -sum over s >= 2 of mu(s) * phi(s) / s^(d+1)

    rho_d   = 1 - prod over primes p of (1 - (p-1)^2/p^(d+2))
            = -sum over s >= 2 of mu(s) * phi(s)^2 / s^(d+2)

Each evaluator truncates one of these forms and returns the approximate
value together with a bracket [lower, upper] guaranteed to contain the
untruncated constant.  All arithmetic runs on integers scaled by
2**precision_bits with directed rounding, so the brackets account for
every rounding step as well as the omitted tail; results are exposed as
exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import ArithSieve, mobius_table, totient_table

KINDS = ("theta", "rho")
ESTIMATE_METHODS = ("euler_product", "mobius_series")

MIN_PRECISION_BITS = 60
DEFAULT_PRECISION_BITS = 96
DEFAULT_PRIME_COUNT = 10000
DEFAULT_SERIES_LIMIT = 10**6


@dataclass(frozen=True)
class DensityEstimate:
    """A density constant with a rigorous two-sided enclosure.

    ``value`` is the truncated evaluation itself; ``lower`` and ``upper``
    bound the exact (untruncated) constant, covering both the tail of the
    product or series and all accumulated rounding.  ``truncation`` is a
    (parameter name, parameter value) pair such as ("prime_count", 10000).
    All three numeric fields are exact fractions.
    """

    kind: str
    degree: int
    value: Fraction
    lower: Fraction
    upper: Fraction
    truncation: tuple[str, int]
    method: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.method not in ESTIMATE_METHODS:
            raise ValueError(f"method must be one of {ESTIMATE_METHODS}")
        if not self.lower <= self.value <= self.upper:
            raise ValueError("bracket does not contain its own value")

    @property
    def width(self) -> Fraction:
        """Total bracket width: truncation tail plus rounding budget."""
        return self.upper - self.lower


def _validate_common(d: int, precision_bits: int) -> None:
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(
            f"precision_bits must be at least {MIN_PRECISION_BITS}, "
            f"got {precision_bits}"
        )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _product_estimate(kind: str, d: int, sieve: ArithSieve, prime_count: int | None,
                      prime_limit: int | None, precision_bits: int) -> DensityEstimate:
    _validate_common(d, precision_bits)
    if (prime_count is None) == (prime_limit is None):
        raise ValueError("give exactly one of prime_count or prime_limit")
    if prime_count is not None:
        if prime_count < 1:
            raise ValueError(f"prime_count must be positive, got {prime_count}")
        if prime_count > sieve.prime_count():
            raise ValueError(
                f"sieve provides {sieve.prime_count()} primes, "
                f"not the {prime_count} requested"
            )
        primes = sieve.primes[:prime_count].tolist()
        tail_from = primes[-1]
        truncation = ("prime_count", prime_count)
    else:
        if prime_limit < 2:
            raise ValueError(f"prime_limit must be at least 2, got {prime_limit}")
        if prime_limit > sieve.limit:
            raise ValueError(
                f"prime_limit {prime_limit} exceeds sieve limit {sieve.limit}"
            )
        cut = int(np.searchsorted(sieve.primes, prime_limit, side="right"))
        primes = sieve.primes[:cut].tolist()
        tail_from = prime_limit
        truncation = ("prime_limit", prime_limit)

    one = 1 << precision_bits
    lo = hi = one
    for p in primes:
        den = p ** (d + 1) if kind == "theta" else p ** (d + 2)
        num = den - (p - 1) if kind == "theta" else den - (p - 1) ** 2
        lo = lo * num // den
        hi = _ceil_div(hi * num, den)

    # Omitted factors multiply the product by something in [exp(-T), 1]
    # where T bounds the sum of 2x over the omitted deficits x; since
    # -log(1-x) <= 2x for x <= 1/2 and each deficit is below 1/p^d,
    #   T <= sum over n > P of 2/n^d <= 2 / ((d-1) P^(d-1)),
    # and exp(-T) >= 1 - T.
    tail = _ceil_div(2 * one, (d - 1) * tail_from ** (d - 1))
    full_lo = max(0, lo * (one - tail) // one) if tail < one else 0
    full_hi = hi

    value = 1 - Fraction(lo + hi, 2 * one)
    lower = 1 - Fraction(full_hi, one)
    upper = 1 - Fraction(full_lo, one)
    return DensityEstimate(kind=kind, degree=d, value=value, lower=lower,
                           upper=upper, truncation=truncation,
                           method="euler_product")


@lru_cache(maxsize=8)
def _squarefree_terms(sieve: ArithSieve, limit: int):
    """Square-free s in 2..limit with mu(s) and phi(s), as parallel lists."""
    mu = mobius_table(limit, sieve)
    phi = totient_table(limit, sieve)
    keep = np.flatnonzero(mu[2:] != 0) + 2
    return keep.tolist(), mu[keep].tolist(), phi[keep].tolist()


def _series_estimate(kind: str, d: int, sieve: ArithSieve, series_limit: int,
                     precision_bits: int) -> DensityEstimate:
    _validate_common(d, precision_bits)
    if series_limit < 1:
        raise ValueError(f"series limit must be positive, got {series_limit}")
    if series_limit > sieve.limit:
        raise ValueError(
            f"series limit {series_limit} exceeds sieve limit {sieve.limit}"
        )
    one = 1 << precision_bits
    expo = d + 1 if kind == "theta" else d + 2
    lo = hi = 0
    if series_limit >= 2:
        moduli, mus, phis = _squarefree_terms(sieve, series_limit)
        for s, m, ph in zip(moduli, mus, phis):
            numer = ph if kind == "theta" else ph * ph
            q, r = divmod(numer << precision_bits, s ** expo)
            if m < 0:  # term enters the sum with a plus sign
                lo += q
                hi += q + (1 if r else 0)
            else:
                lo -= q + (1 if r else 0)
                hi -= q

    # Tail: each summand is below 1/s^d in absolute value, so the omitted
    # part is within sum over s > S of 1/s^d <= 1 / ((d-1) S^(d-1)).
    tail = _ceil_div(one, (d - 1) * series_limit ** (d - 1))
    value = Fraction(lo + hi, 2 * one)
    lower = Fraction(lo - tail, one)
    upper = Fraction(hi + tail, one)
    return DensityEstimate(kind=kind, degree=d, value=value, lower=lower,
                           upper=upper, truncation=("series_limit", series_limit),
                           method="mobius_series")


def theta_product(d: int, sieve: ArithSieve, *, prime_count: int | None = None,
                  prime_limit: int | None = None,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> DensityEstimate:
    """Evaluate theta_d from its Euler product over an initial prime range.

    Exactly one of ``prime_count`` (use the first so many primes) or
    ``prime_limit`` (use all primes up to a bound) selects the truncation;
    with neither given, the first 10,000 primes are used.  The bracket
    encloses the full infinite product.
    """
    if prime_count is None and prime_limit is None:
        prime_count = DEFAULT_PRIME_COUNT
    return _product_estimate("theta", d, sieve, prime_count, prime_limit,
                             precision_bits)


def rho_product(d: int, sieve: ArithSieve, *, prime_count: int | None = None,
                prime_limit: int | None = None,
                precision_bits: int = DEFAULT_PRECISION_BITS) -> DensityEstimate:
    """Euler-product evaluation of rho_d; see :func:`theta_product`."""
    if prime_count is None and prime_limit is None:
        prime_count = DEFAULT_PRIME_COUNT
    return _product_estimate("rho", d, sieve, prime_count, prime_limit,
                             precision_bits)


def theta_series(d: int, sieve: ArithSieve, *,
                 series_limit: int = DEFAULT_SERIES_LIMIT,
                 precision_bits: int = DEFAULT_PRECISION_BITS) -> DensityEstimate:
    """Evaluate theta_d from its alternating series over square-free moduli.

    Sums -mu(s) phi(s) / s^(d+1) for square-free s up to ``series_limit``
    with directed rounding, then widens the bracket by the tail bound
    1 / ((d-1) S^(d-1)).  Entirely independent of the product route, which
    is what makes cross-method agreement a meaningful check.
    """
    return _series_estimate("theta", d, sieve, series_limit, precision_bits)


def rho_series(d: int, sieve: ArithSieve, *,
               series_limit: int = DEFAULT_SERIES_LIMIT,
               precision_bits: int = DEFAULT_PRECISION_BITS) -> DensityEstimate:
    """Series evaluation of rho_d, summand -mu(s) phi(s)^2 / s^(d+2)."""
    return _series_estimate("rho", d, sieve, series_limit, precision_bits)


def asymptotic_main(kind: str, d: int) -> Fraction:
    """Leading closed-form approximation: 1/2^(d+1) for theta, 1/2^(d+2) for rho.

    The p = 2 factor dominates both products as d grows; the remaining
    factors contribute O(1/3^d).
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    return Fraction(1, 2 ** (d + 1)) if kind == "theta" else Fraction(1, 2 ** (d + 2))


def refined_asymptotic_theta(d: int) -> Fraction:
    """Two-term approximation of theta_d: 1/2^(d+1) + 2/3^(d+1).

    Expanding the product over its two smallest primes: the p = 2 factor
    contributes 1/2^(d+1) and the p = 3 factor adds 2/3^(d+1) at the next
    order (the cross term and all later primes fall under O(1/(d 3^d))).
    Strictly sharper than :func:`asymptotic_main` for every d >= 3.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    return Fraction(1, 2 ** (d + 1)) + Fraction(2, 3 ** (d + 1))
