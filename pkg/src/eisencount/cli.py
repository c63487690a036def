"""Command line interface.

Subcommands: count, density, table, verify, error-term.  Shared knobs sit
on the top-level group and mirror environment variables with the EISEN_
prefix (flags beat environment, environment beats defaults).  Exit codes
are a stable contract: 0 success, 2 bad usage, 3 resource refusal,
4 verification failure.
"""

from __future__ import annotations

import functools
import math
import re
import sys
from dataclasses import dataclass

import click

from . import report
from .arith import build_sieve
from .counting import count_general_eisenstein, count_monic_eisenstein
from .density import (DEFAULT_PRIME_COUNT, DEFAULT_SERIES_LIMIT,
                      rho_product, rho_series, theta_product, theta_series)
from .errors import BudgetExceededError
from .oracle import brute_count_general, brute_count_monic


@dataclass(frozen=True)
class CliConfig:
    """Run-wide settings resolved from flags, environment, and defaults."""

    sieve_limit: int = 10**7
    enumeration_budget: int = 10**8
    precision_bits: int = 96
    threads: int = 1
    output_format: str = "text"


class VerificationFailure(click.ClickException):
    """A self-check found disagreement; maps to exit code 4."""

    exit_code = 4


class DegreeRangeType(click.ParamType):
    """Accepts a single degree like ``7`` or a range like ``2..10``."""

    name = "degrees"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        match = re.fullmatch(r"(\d+)\.\.(\d+)", text)
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
        elif text.isdigit():
            lo = hi = int(text)
        else:
            self.fail(f"expected a degree or LO..HI range, got {value!r}",
                      param, ctx)
        if lo < 2:
            self.fail(f"degrees start at 2, got {lo}", param, ctx)
        if lo > hi:
            self.fail(f"empty degree range {text!r}", param, ctx)
        return lo, hi


class HeightListType(click.ParamType):
    """Comma-separated heights, strictly increasing, each at least 2."""

    name = "heights"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = str(value).split(",")
        try:
            heights = tuple(int(part.strip()) for part in parts)
        except ValueError:
            self.fail(f"heights must be integers, got {value!r}", param, ctx)
        if not heights:
            self.fail("need at least one height", param, ctx)
        if any(h < 2 for h in heights):
            self.fail("heights must all be at least 2", param, ctx)
        if any(b <= a for a, b in zip(heights, heights[1:])):
            self.fail("heights must be strictly increasing", param, ctx)
        return heights


def _guarded(fn):
    """Map library refusals and argument rejections onto the exit contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except BudgetExceededError as exc:
            click.echo(f"refused: {exc}", err=True)
            sys.exit(3)
        except ValueError as exc:
            raise click.UsageError(str(exc))

    return wrapper


def _nth_prime_bound(n: int) -> int:
    """An upper bound for the n-th prime, safe for sieve sizing."""
    if n < 6:
        return 13
    x = n * (math.log(n) + math.log(math.log(n)))
    return int(x) + 1


def _sieve_for(cfg: CliConfig, needed: int):
    """Build a sieve big enough for the command, capped by --sieve-limit."""
    return build_sieve(max(needed, 2), max_limit=cfg.sieve_limit)


@click.group(context_settings={"auto_envvar_prefix": "EISEN"})
@click.option("--sieve-limit", type=click.IntRange(min=2), default=10**7,
              show_default=True,
              help="Largest sieve the run may allocate (memory cap).")
@click.option("--enumeration-budget", type=click.IntRange(min=1),
              default=10**8, show_default=True,
              help="Most polynomials a brute-force enumeration may visit.")
@click.option("--precision-bits", type=click.IntRange(min=60), default=96,
              show_default=True,
              help="Working precision for density brackets (bits).")
@click.option("--threads", type=click.IntRange(min=1), default=1,
              show_default=True,
              help="Worker threads for the exact counting sums.")
@click.option("--output-format", type=click.Choice(["text", "csv", "json"]),
              default="text", show_default=True,
              help="Default rendering for commands with a --format flag.")
@click.pass_context
def main(ctx, sieve_limit, enumeration_budget, precision_bits, threads,
         output_format):
    """Exact counts and densities of Eisenstein polynomials."""
    ctx.obj = CliConfig(sieve_limit=sieve_limit,
                        enumeration_budget=enumeration_budget,
                        precision_bits=precision_bits,
                        threads=threads,
                        output_format=output_format)


@main.command("count")
@click.option("--degree", "-d", type=click.IntRange(min=2), required=True,
              help="Polynomial degree (at least 2).")
@click.option("--height", "-H", "height", type=click.IntRange(min=1),
              required=True, help="Height bound for the coefficients.")
@click.option("--variant", type=click.Choice(["monic", "general"]),
              required=True)
@click.option("--method", type=click.Choice(["exact", "brute", "both"]),
              default="exact", show_default=True)
@click.pass_obj
@_guarded
def cmd_count(cfg: CliConfig, degree, height, variant, method):
    """Count Eisenstein polynomials of one degree and height bound."""
    exact = brute = None
    if method in ("exact", "both"):
        sieve = _sieve_for(cfg, height)
        counter = (count_monic_eisenstein if variant == "monic"
                   else count_general_eisenstein)
        exact = counter(degree, height, sieve, threads=cfg.threads).value
    if method in ("brute", "both"):
        counter = (brute_count_monic if variant == "monic"
                   else brute_count_general)
        brute = counter(degree, height, budget=cfg.enumeration_budget).value
    if method == "both" and exact != brute:
        raise VerificationFailure(
            f"count mismatch for {variant} degree {degree} height {height}: "
            f"inclusion-exclusion {exact} vs brute force {brute}"
        )
    click.echo(exact if exact is not None else brute)


@main.command("density")
@click.option("--degree", "-d", type=click.IntRange(min=2), required=True)
@click.option("--kind", type=click.Choice(["theta", "rho"]), required=True,
              help="theta: monic density; rho: general density.")
@click.option("--prime-count", type=click.IntRange(min=1), default=None,
              help="Truncate the product to the first N primes.")
@click.option("--prime-limit", type=click.IntRange(min=2), default=None,
              help="Truncate the product to primes up to this bound.")
@click.option("--series-limit", type=click.IntRange(min=1), default=None,
              help="Truncate the series at this modulus.")
@click.option("--method", type=click.Choice(["product", "series", "both"]),
              default="product", show_default=True)
@click.pass_obj
@_guarded
def cmd_density(cfg: CliConfig, degree, kind, prime_count, prime_limit,
                series_limit, method):
    """Evaluate a density constant with its rigorous bracket."""
    if prime_count is not None and prime_limit is not None:
        raise click.UsageError("give at most one of --prime-count/--prime-limit")
    estimates = []
    if method in ("product", "both"):
        if prime_count is None and prime_limit is None:
            prime_count = DEFAULT_PRIME_COUNT
        needed = (_nth_prime_bound(prime_count) if prime_count is not None
                  else prime_limit)
        sieve = _sieve_for(cfg, needed)
        fn = theta_product if kind == "theta" else rho_product
        estimates.append(fn(degree, sieve, prime_count=prime_count,
                            prime_limit=prime_limit,
                            precision_bits=cfg.precision_bits))
    if method in ("series", "both"):
        limit = series_limit if series_limit is not None else DEFAULT_SERIES_LIMIT
        sieve = _sieve_for(cfg, limit)
        fn = theta_series if kind == "theta" else rho_series
        estimates.append(fn(degree, sieve, series_limit=limit,
                            precision_bits=cfg.precision_bits))
    for est in estimates:
        name, param = est.truncation
        click.echo(
            f"{est.kind}({est.degree}) = {float(est.value):.12g}  "
            f"in [{float(est.lower):.12g}, {float(est.upper):.12g}]  "
            f"via {est.method} {name}={param}"
        )
    if len(estimates) == 2:
        a, b = estimates
        if a.upper < b.lower or b.upper < a.lower:
            raise VerificationFailure(
                f"{kind}({degree}): product and series brackets are disjoint"
            )


@main.command("table")
@click.option("--degrees", type=DegreeRangeType(), default="2..10",
              show_default=True, help="Degree range, e.g. 2..10 or a single degree.")
@click.option("--prime-count", type=click.IntRange(min=1),
              default=DEFAULT_PRIME_COUNT, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]),
              default=None, help="Defaults to --output-format.")
@click.pass_obj
@_guarded
def cmd_table(cfg: CliConfig, degrees, prime_count, fmt):
    """Tabulate theta and rho over a degree range at display precision."""
    d_min, d_max = degrees
    sieve = _sieve_for(cfg, _nth_prime_bound(prime_count))
    table = report.density_table(d_min, d_max, sieve, prime_count=prime_count)
    fmt = fmt or cfg.output_format
    if fmt == "csv":
        click.echo(report.emit_csv(table), nl=False)
    elif fmt == "json":
        click.echo(report.emit_json(table), nl=False)
    else:
        click.echo("d   theta   rho")
        for d, theta, rho in table.rows:
            click.echo(f"{d:<3} {theta}  {rho}")


@main.command("verify")
@click.option("--max-degree", type=click.IntRange(min=2), default=3,
              show_default=True)
@click.option("--max-height", type=click.IntRange(min=1), default=20,
              show_default=True)
@click.pass_obj
@_guarded
def cmd_verify(cfg: CliConfig, max_degree, max_height):
    """Replay the fast counts against brute force over a full grid."""
    # Refuse up front if the largest enumeration would blow the budget,
    # rather than part-way through the sweep.
    worst = (2 * max_height + 1) ** (max_degree + 1)
    if worst > cfg.enumeration_budget:
        raise BudgetExceededError(
            f"verification up to degree {max_degree}, height {max_height} "
            f"needs {worst} polynomials in one enumeration, over the budget "
            f"of {cfg.enumeration_budget}"
        )
    sieve = _sieve_for(cfg, max_height)
    mismatches = []
    checks = 0
    click.echo("variant  degree  heights  result")
    for d in range(2, max_degree + 1):
        for variant, fast, brute in (
            ("monic", count_monic_eisenstein, brute_count_monic),
            ("general", count_general_eisenstein, brute_count_general),
        ):
            bad = []
            for H in range(1, max_height + 1):
                a = fast(d, H, sieve, threads=cfg.threads).value
                b = brute(d, H, budget=cfg.enumeration_budget).value
                checks += 1
                if a != b:
                    bad.append((H, a, b))
            status = "ok" if not bad else f"MISMATCH at H={bad[0][0]}"
            click.echo(f"{variant:<8} {d:<7} 1..{max_height:<5} {status}")
            mismatches += [(variant, d, *entry) for entry in bad]
    if mismatches:
        variant, d, H, a, b = mismatches[0]
        raise VerificationFailure(
            f"{len(mismatches)} of {checks} checks disagree; first: "
            f"{variant} degree {d} height {H}: "
            f"inclusion-exclusion {a} vs brute force {b}"
        )
    click.echo(f"{checks} comparisons, all equal")


@main.command("error-term")
@click.option("--variant", type=click.Choice(["monic", "general"]),
              required=True)
@click.option("--degree", "-d", type=click.IntRange(min=2), required=True)
@click.option("--heights", type=HeightListType(), required=True,
              help="Comma-separated, strictly increasing, each >= 2.")
@click.option("--prime-count", type=click.IntRange(min=1),
              default=DEFAULT_PRIME_COUNT, show_default=True,
              help="Product truncation for the density constant.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]),
              default=None, help="Defaults to --output-format.")
@click.pass_obj
@_guarded
def cmd_error_term(cfg: CliConfig, variant, degree, heights, prime_count, fmt):
    """Profile exact counts against main terms along a height ladder."""
    needed = max(max(heights), _nth_prime_bound(prime_count))
    sieve = _sieve_for(cfg, needed)
    rows = report.error_term_profile(variant, degree, heights, sieve,
                                     prime_count=prime_count,
                                     threads=cfg.threads)
    fmt = fmt or cfg.output_format
    if fmt == "csv":
        click.echo(report.emit_csv(rows), nl=False)
    elif fmt == "json":
        click.echo(report.emit_json(rows), nl=False)
    else:
        click.echo("H  exact  main  residual  ratio")
        for r in rows:
            click.echo(f"{r.height}  {r.exact}  {float(r.main):.10g}  "
                       f"{float(r.residual):.10g}  {r.ratio:.10g}")


if __name__ == "__main__":
    main()
