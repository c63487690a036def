"""Exact Eisenstein counts via Moebius inclusion-exclusion.

The number of Eisenstein polynomials of degree d and height at most H is
assembled from per-modulus counts: for a square-free modulus s, the
polynomials whose witness primes include every prime of s form a box
whose cardinality has a closed form in terms of :func:`~eisencount.arith.
phi_bounded`.  Alternating these boxes over all square-free s up to H
gives the exact count, with arbitrary-precision integers throughout.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .arith import ArithSieve, mobius_table, phi_bounded

VARIANTS = ("monic", "general")
METHODS = ("brute", "inclusion_exclusion")


@dataclass(frozen=True)
class ExactCount:
    """An exact polynomial count plus the parameters that produced it.

    ``value`` is a non-negative integer, never a float; ``variant`` says
    whether the leading coefficient was fixed to 1 (monic) or ranged over
    the height box (general); ``method`` records which route computed it.
    """

    value: int
    degree: int
    height: int
    variant: str
    method: str

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if not 0 <= self.value <= (2 * self.height + 1) ** (self.degree + 1):
            raise ValueError("count outside the possible range for (degree, height)")


def _validate_degree_height(d: int, H: int) -> None:
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    if H < 1:
        raise ValueError(f"height bound must be at least 1, got {H}")


def count_monic_s(d: int, s: int, H: int, sieve: ArithSieve) -> int:
    """Monic polynomials of degree d whose lower coefficients all carry s.

    Counts monic f = X^d + a_{d-1} X^{d-1} + ... + a_0 with every |a_i| <= H,
    s dividing each of a_0 .. a_{d-1}, and a_0 / s coprime to s.  Writing
    q = floor(H / s), the choices factor as (2q+1) per middle coefficient
    and phi_bounded(s, q) for the constant term:

        (2q + 1)^(d-1) * phi_bounded(s, q)

    For square-free s this is exactly the number of monic polynomials whose
    witness primes include every prime factor of s, which is what makes the
    alternating sum in :func:`count_monic_eisenstein` exact.
    """
    _validate_degree_height(d, H)
    if s < 1:
        raise ValueError(f"modulus must be positive, got {s}")
    q = H // s
    return (2 * q + 1) ** (d - 1) * phi_bounded(s, q, sieve)


def count_general_s(d: int, s: int, H: int, sieve: ArithSieve) -> int:
    """Like :func:`count_monic_s` with a free leading coefficient.

    The leading coefficient ranges over |a_d| <= H subject to being coprime
    to s, contributing an extra factor phi_bounded(s, H):

        (2q + 1)^(d-1) * phi_bounded(s, q) * phi_bounded(s, H)
    """
    _validate_degree_height(d, H)
    if s < 1:
        raise ValueError(f"modulus must be positive, got {s}")
    q = H // s
    return (2 * q + 1) ** (d - 1) * phi_bounded(s, q, sieve) * phi_bounded(s, H, sieve)


def _signed_sum(d: int, H: int, sieve: ArithSieve, per_s, mu: list[int],
                start: int, stop: int) -> int:
    total = 0
    for s in range(start, stop):
        m = mu[s]
        if m == 0:
            continue
        total -= m * per_s(d, s, H, sieve)
    return total


def _inclusion_exclusion(d: int, H: int, sieve: ArithSieve, per_s,
                         threads: int) -> int:
    _validate_degree_height(d, H)
    if H > sieve.limit:
        raise ValueError(f"height {H} exceeds sieve limit {sieve.limit}")
    if threads < 1:
        raise ValueError(f"threads must be at least 1, got {threads}")
    mu = mobius_table(H, sieve).tolist()
    span = H - 1  # moduli 2..H
    if threads == 1 or span <= 1:
        return _signed_sum(d, H, sieve, per_s, mu, 2, H + 1)
    blocks = min(threads, span)
    edges = [2 + (span * i) // blocks for i in range(blocks + 1)]
    # Partial sums over contiguous blocks; exact integer addition makes the
    # result independent of the partition.
    with ThreadPoolExecutor(max_workers=blocks) as pool:
        parts = pool.map(
            lambda i: _signed_sum(d, H, sieve, per_s, mu, edges[i], edges[i + 1]),
            range(blocks),
        )
        return sum(parts)


def count_monic_eisenstein(d: int, H: int, sieve: ArithSieve, *,
                           threads: int = 1) -> ExactCount:
    """Exact number of monic Eisenstein polynomials of degree d, height <= H.

    Evaluates the alternating sum over square-free moduli

        -sum over s = 2..H of mu(s) * count_monic_s(d, s, H)

    in exact integer arithmetic.  Moduli beyond H contribute nothing, so
    the truncation at H is not an approximation.

    Parameters
    ----------
    d : int
        Degree, at least 2.
    H : int
        Height bound for the non-leading coefficients, at least 1; must
        not exceed ``sieve.limit``.
    threads : int, optional
        Split the modulus range into this many contiguous blocks summed
        concurrently.  The result is identical for any value.
    """
    value = _inclusion_exclusion(d, H, sieve, count_monic_s, threads)
    return ExactCount(value=value, degree=d, height=H, variant="monic",
                      method="inclusion_exclusion")


def count_general_eisenstein(d: int, H: int, sieve: ArithSieve, *,
                             threads: int = 1) -> ExactCount:
    """Exact number of Eisenstein polynomials with all of a_0..a_d bounded by H.

    Same alternating sum as :func:`count_monic_eisenstein` built on
    :func:`count_general_s`; the leading coefficient now ranges over the
    height box as well (a zero leading coefficient never occurs, since no
    prime can avoid dividing 0).
    """
    value = _inclusion_exclusion(d, H, sieve, count_general_s, threads)
    return ExactCount(value=value, degree=d, height=H, variant="general",
                      method="inclusion_exclusion")
