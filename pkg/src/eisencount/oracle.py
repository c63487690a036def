"""Brute-force ground truth for the Eisenstein criterion.

Everything here works by direct enumeration and trial division, with no
sieve and no inclusion-exclusion, so it can serve as an independent check
on the fast counting route.  The enumeration refuses requests above a
configurable polynomial budget rather than truncating silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .counting import ExactCount
from .errors import BudgetExceededError

DEFAULT_ENUMERATION_BUDGET = 10**8


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficients stored constant term first.

    ``coefficients[i]`` is the coefficient of X^i, so the tuple runs
    a_0, a_1, ..., a_d and has length d + 1.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def height(self) -> int:
        """Largest absolute value among the coefficients."""
        return max(abs(c) for c in self.coefficients)

    @property
    def constant_term(self) -> int:
        return self.coefficients[0]

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]


def _prime_divisors(n: int) -> tuple[int, ...]:
    """Ascending prime divisors of |n| by trial division; n must be nonzero."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def _candidate_primes(a0: int) -> tuple[int, ...]:
    """Primes dividing a0 exactly once; the only possible witnesses."""
    if a0 == 0:
        return ()
    return tuple(p for p in _prime_divisors(a0) if a0 % (p * p) != 0)


def eisenstein_witnesses(f: Polynomial) -> list[int]:
    """All primes certifying the Eisenstein criterion for f, ascending.

    A witness p divides every coefficient below the leading one, divides
    the constant term only to the first power, and does not divide the
    leading coefficient.  Any witness must divide a_0, so the search runs
    over the prime divisors of the constant term; a_0 = 0 admits none
    (every p^2 divides 0).

    Raises ValueError for constant polynomials, where the criterion is
    not defined.
    """
    if f.degree < 1:
        raise ValueError("criterion needs degree at least 1")
    middles = f.coefficients[1:-1]
    lead = f.coefficients[-1]
    witnesses = []
    for p in _candidate_primes(f.constant_term):
        if any(c % p for c in middles):
            continue
        if lead % p == 0:
            continue
        witnesses.append(p)
    return witnesses


def is_eisenstein(f: Polynomial) -> bool:
    """True when at least one witness prime exists."""
    return bool(eisenstein_witnesses(f))


def _check_budget(size: int, budget: int, what: str) -> None:
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    if size > budget:
        raise BudgetExceededError(
            f"{what} needs {size} polynomials, over the budget of {budget}"
        )


def brute_count_monic(d: int, H: int, *,
                      budget: int = DEFAULT_ENUMERATION_BUDGET) -> ExactCount:
    """Count monic Eisenstein polynomials by exhausting the coefficient box.

    Enumerates every (a_0, ..., a_{d-1}) with entries in [-H, H], leading
    coefficient fixed to 1, and counts those passing the criterion.  The
    box holds (2H+1)^d polynomials; requests above ``budget`` are refused
    with :class:`BudgetExceededError` before any work starts.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    if H < 1:
        raise ValueError(f"height bound must be at least 1, got {H}")
    _check_budget((2 * H + 1) ** d, budget, f"monic degree-{d} enumeration")
    span = range(-H, H + 1)
    count = 0
    for a0 in span:
        primes = _candidate_primes(a0)
        if not primes:
            continue
        # Leading coefficient 1 is never divisible, so only the middle
        # coefficients decide; a0 itself carries every candidate already.
        for middle in itertools.product(span, repeat=d - 1):
            if any(all(c % p == 0 for c in middle) for p in primes):
                count += 1
    return ExactCount(value=count, degree=d, height=H, variant="monic",
                      method="brute")


def brute_count_general(d: int, H: int, *,
                        budget: int = DEFAULT_ENUMERATION_BUDGET) -> ExactCount:
    """Count Eisenstein polynomials with the leading coefficient free too.

    Enumerates (a_0, ..., a_d), all entries in [-H, H], which is
    (2H+1)^(d+1) polynomials against the budget.  A polynomial counts when
    some candidate prime of a_0 divides all middle coefficients and misses
    the leading one; a_d = 0 never qualifies.
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    if H < 1:
        raise ValueError(f"height bound must be at least 1, got {H}")
    _check_budget((2 * H + 1) ** (d + 1), budget,
                  f"general degree-{d} enumeration")
    span = range(-H, H + 1)
    count = 0
    for a0 in span:
        primes = _candidate_primes(a0)
        if not primes:
            continue
        for middle in itertools.product(span, repeat=d - 1):
            surviving = [p for p in primes if all(c % p == 0 for c in middle)]
            if not surviving:
                continue
            for lead in span:
                if any(lead % p for p in surviving):
                    count += 1
    return ExactCount(value=count, degree=d, height=H, variant="general",
                      method="brute")
