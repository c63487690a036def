"""Verification artifacts: density tables, error-term profiles, CSV/JSON.

This module assembles results from the counting and density layers into
the two deliverable shapes: a table of theta_d and rho_d at display
precision, and a profile showing how far exact counts sit from their
main terms as the height grows.  Both render to CSV and JSON with stable
column order and byte-reproducible formatting.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import ArithSieve
from .counting import (VARIANTS, count_general_eisenstein,
                       count_monic_eisenstein)
from .density import (DEFAULT_PRIME_COUNT, DensityEstimate, rho_product,
                      theta_product)

PROFILE_COLUMNS = ("variant", "d", "H", "exact", "main", "residual", "ratio")
TABLE_COLUMNS = ("d", "theta", "rho")


def round_half_away(value: Fraction | int, places: int = 4) -> str:
    """Fixed-point decimal string, rounding ties away from zero.

    >>> round_half_away(Fraction(25145, 100000))
    '0.2515'
    """
    if places < 1:
        raise ValueError(f"places must be at least 1, got {places}")
    frac = Fraction(value) * 10 ** places
    q, r = divmod(abs(frac.numerator), frac.denominator)
    if 2 * r >= frac.denominator:
        q += 1
    sign = "-" if frac < 0 and q > 0 else ""
    scale = 10 ** places
    return f"{sign}{q // scale}.{q % scale:0{places}d}"


def _real(x) -> float:
    """Round a real to 10 significant digits, the interchange precision."""
    return float(f"{float(x):.10g}")


def _format_real(x) -> str:
    return f"{float(x):.10g}"


@dataclass(frozen=True)
class DensityTable:
    """Rows of (degree, theta at 4 decimals, rho at 4 decimals)."""

    rows: tuple[tuple[int, str, str], ...]
    prime_count: int


@dataclass(frozen=True)
class ErrorTermRow:
    """One height's comparison of an exact count against its main term.

    ``main`` is theta_d * 2^d * H^d for the monic variant and
    rho_d * 2^(d+1) * H^(d+1) for the general one; ``residual`` is
    exact - main, and ``ratio`` divides the residual by the expected
    growth order from :func:`error_normalization`.
    """

    variant: str
    degree: int
    height: int
    exact: int
    main: Fraction
    residual: Fraction
    ratio: float


def error_normalization(variant: str, d: int, H: int) -> int | float:
    """Growth order the residual is measured against.

    H^(d-1) for monic degrees above 2 and H^d for general ones; at d = 2
    an extra squared natural logarithm enters: H (ln H)^2 respectively
    H^2 (ln H)^2.  Heights must be at least 2 so the logarithm is positive.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if H < 2:
        raise ValueError(f"height must be at least 2, got {H}")
    if d > 2:
        return H ** (d - 1) if variant == "monic" else H ** d
    log_sq = math.log(H) ** 2
    return H * log_sq if variant == "monic" else H * H * log_sq


def density_table(d_min: int, d_max: int, sieve: ArithSieve, *,
                  prime_count: int = DEFAULT_PRIME_COUNT) -> DensityTable:
    """Tabulate theta_d and rho_d for d_min <= d <= d_max at 4 decimals.

    Values come from the Euler products truncated to ``prime_count``
    primes; display strings round ties away from zero.
    """
    if not 2 <= d_min <= d_max:
        raise ValueError(f"need 2 <= d_min <= d_max, got {d_min}..{d_max}")
    rows = []
    for d in range(d_min, d_max + 1):
        theta = theta_product(d, sieve, prime_count=prime_count)
        rho = rho_product(d, sieve, prime_count=prime_count)
        rows.append((d, round_half_away(theta.value), round_half_away(rho.value)))
    return DensityTable(rows=tuple(rows), prime_count=prime_count)


def error_term_profile(variant: str, d: int, heights: Sequence[int],
                       sieve: ArithSieve, *,
                       prime_count: int = DEFAULT_PRIME_COUNT,
                       threads: int = 1) -> list[ErrorTermRow]:
    """Compare exact counts against main terms along increasing heights.

    For each H in ``heights`` (strictly increasing, every one at least 2)
    the exact count comes from the inclusion-exclusion counter and the
    main term from the density constant at the given product truncation;
    the residual uses the density's point value, whose own truncation
    error is far below the residual sizes profiled here.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if not heights:
        raise ValueError("need at least one height")
    heights = list(heights)
    if any(h < 2 for h in heights):
        raise ValueError("heights must all be at least 2")
    if any(b <= a for a, b in zip(heights, heights[1:])):
        raise ValueError("heights must be strictly increasing")
    if variant == "monic":
        constant = theta_product(d, sieve, prime_count=prime_count)
        count_fn, power = count_monic_eisenstein, d
    else:
        constant = rho_product(d, sieve, prime_count=prime_count)
        count_fn, power = count_general_eisenstein, d + 1
    rows = []
    for H in heights:
        exact = count_fn(d, H, sieve, threads=threads).value
        main = constant.value * 2 ** power * H ** power
        residual = exact - main
        ratio = float(residual / error_normalization(variant, d, H))
        rows.append(ErrorTermRow(variant=variant, degree=d, height=H,
                                 exact=exact, main=main, residual=residual,
                                 ratio=ratio))
    return rows


def _require_rows(obj) -> tuple[str, list]:
    """Classify emitter input as a density table or a list of profile rows."""
    if isinstance(obj, DensityTable):
        if not obj.rows:
            raise ValueError("refusing to emit an empty table")
        return "table", list(obj.rows)
    rows = list(obj) if isinstance(obj, Iterable) else None
    if not rows:
        raise ValueError("refusing to emit empty output")
    if not all(isinstance(r, ErrorTermRow) for r in rows):
        raise TypeError("expected a DensityTable or ErrorTermRow items")
    return "profile", rows


def emit_csv(obj: DensityTable | Iterable[ErrorTermRow]) -> str:
    """Render to CSV: header then data rows, LF endings.

    Density tables use columns d,theta,rho with the 4-decimal display
    strings; profiles use variant,d,H,exact,main,residual,ratio with the
    exact count in full decimal and reals at 10 significant digits.
    """
    shape, rows = _require_rows(obj)
    if shape == "table":
        lines = [",".join(TABLE_COLUMNS)]
        lines += [f"{d},{theta},{rho}" for d, theta, rho in rows]
    else:
        lines = [",".join(PROFILE_COLUMNS)]
        lines += [
            f"{r.variant},{r.degree},{r.height},{r.exact},"
            f"{_format_real(r.main)},{_format_real(r.residual)},"
            f"{_format_real(r.ratio)}"
            for r in rows
        ]
    return "\n".join(lines) + "\n"


def emit_json(obj: DensityTable | Iterable[ErrorTermRow]) -> str:
    """Render to JSON, losslessly for downstream consumers.

    Exact counts are decimal strings (they overflow fixed-width integer
    parsers); reals are JSON numbers rounded to 10 significant digits.
    A density table becomes an object with prime_count and rows; a
    profile becomes an array of row objects.
    """
    shape, rows = _require_rows(obj)
    if shape == "table":
        payload = {
            "prime_count": obj.prime_count,
            "rows": [{"d": d, "theta": theta, "rho": rho}
                     for d, theta, rho in rows],
        }
    else:
        payload = [
            {
                "variant": r.variant,
                "d": r.degree,
                "H": r.height,
                "exact": str(r.exact),
                "main": _real(r.main),
                "residual": _real(r.residual),
                "ratio": _real(r.ratio),
            }
            for r in rows
        ]
    return json.dumps(payload, indent=2) + "\n"
