"""Command-line surface: evaluate, verify, and generate reports.

Exit codes: 0 success / all checks pass, 1 verification failure (or I/O
failure while writing a report), 2 usage error, 3 a resource guard
refused the computation.
"""

from __future__ import annotations

import functools
import sys
from math import gcd

import click

from . import averaging, menon, verify
from .phi import phi_k
from .reporting import FORMATS, render
from .rho import DEFAULT_GUARD, BudgetExceededError, rho

INT64_MAX = 2**63 - 1


def output_options(command):
    for option in (
        click.option(
            "--format",
            "fmt",
            type=click.Choice(FORMATS),
            default="plain",
            show_default=True,
            help="Output rendering.",
        ),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output to a file instead of stdout."),
        click.option("--threads", type=click.IntRange(1, 256), default=1, show_default=True, help="Worker threads for bulk table building (results are identical at any setting)."),
        click.option("--no-meta", is_flag=True, help="Omit the generation-time header so output is byte-reproducible."),
    ):
        command = option(command)
    return command


def guard_errors(command):
    # resource guards map to exit code 3, everything else propagates
    @functools.wraps(command)
    def wrapped(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BudgetExceededError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapped


def _emit(text: str, out: str | None):
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(1)


def _int64(value: int, name: str, minimum: int = 1) -> int:
    if value < minimum or value > INT64_MAX:
        raise click.BadParameter(f"{name} must be in [{minimum}, 2^63 - 1]")
    return value


@click.group()
@click.version_option(package_name="sqtotient")
def main():
    """Exact counts of tuples with invertible square sums modulo n."""


@main.command("phi")
@click.option("-k", "--k", "k", type=int, required=True, help="Tuple length.")
@click.option("-n", "--n", "n", type=int, default=None, help="Single modulus to evaluate.")
@click.option("--range", "range_end", type=int, default=None, help="Evaluate every modulus 1..X via the sieve table.")
@output_options
@guard_errors
def phi_command(k, n, range_end, fmt, out, threads, no_meta):
    """Evaluate the square-sum totient at one modulus or over a range."""
    k = _int64(k, "-k")
    if (n is None) == (range_end is None):
        raise click.UsageError("provide exactly one of -n or --range")
    meta = not no_meta
    if n is not None:
        n = _int64(n, "-n")
        value = phi_k(k, n)
        if fmt == "plain":
            # scalar answers stay bare so they can be piped directly
            _emit(f"{value}\n", out)
        else:
            _emit(render([{"k": k, "n": n, "phi": value}], ["k", "n", "phi"], fmt, meta), out)
        return
    range_end = _int64(range_end, "--range")
    values = averaging.phi_k_table(k, range_end, threads=threads)
    rows = [{"k": k, "n": n_, "phi": values[n_]} for n_ in range(1, range_end + 1)]
    _emit(render(rows, ["k", "n", "phi"], fmt, meta), out)


@main.command("rho")
@click.option("-k", "--k", "k", type=int, required=True, help="Tuple length.")
@click.option("-l", "--lam", "lam", type=int, required=True, help="Target residue class.")
@click.option("-n", "--n", "n", type=int, required=True, help="Modulus.")
@click.option("--max-enum", type=int, default=DEFAULT_GUARD, show_default=True, help="Tuple budget for the enumeration fallback.")
@output_options
@guard_errors
def rho_command(k, lam, n, max_enum, fmt, out, threads, no_meta):
    """Count tuples whose square sum hits one residue class."""
    k = _int64(k, "-k")
    n = _int64(n, "-n")
    lam = _int64(lam, "-l", minimum=0)
    path = "formula" if (n == 1 or gcd(lam, n) == 1) else "oracle"
    value = rho(k, lam, n, guard=max_enum)
    if fmt == "plain":
        _emit(f"{value} ({path})\n", out)
        return
    rows = [{"k": k, "lambda": lam, "n": n, "rho": value, "path": path}]
    _emit(render(rows, ["k", "lambda", "n", "rho", "path"], fmt, not no_meta), out)


@main.command("verify")
@click.argument("suite", type=click.Choice(sorted(verify.SUITES)))
@click.option("--limit", type=click.IntRange(1, INT64_MAX), default=50, show_default=True, help="Range bound handed to the suite.")
@click.option("--max-enum", type=int, default=DEFAULT_GUARD, show_default=True, help="Tuple budget for enumeration oracles.")
@output_options
@guard_errors
def verify_command(suite, limit, max_enum, fmt, out, threads, no_meta):
    """Run a property suite; exit 0 only if every check passes."""
    result = verify.run_suite(suite, limit, guard=max_enum)
    rows = [
        {"suite": result.suite, "check": c.name, "ok": c.ok, "detail": c.detail}
        for c in result.checks
    ]
    _emit(render(rows, ["suite", "check", "ok", "detail"], fmt, not no_meta), out)
    if not result.ok:
        sys.exit(1)


@main.command("report")
@click.argument(
    "kind", type=click.Choice(["average", "constants", "minimal-order", "menon", "menon-mult"])
)
@click.option("-k", "--k", "k", type=int, default=None, help="Tuple length (defaults per report kind).")
@click.option("--xs", default=None, help="Comma-separated ascending range ends, e.g. 1000,10000.")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="Certified tail target for constants.")
@click.option("--primes", "prime_count", type=click.IntRange(3, 10000), default=9, show_default=True, help="Primorial length for minimal-order.")
@click.option("--experimental", is_flag=True, help="Allow even k in the minimal-order scan (data only).")
@click.option("--nmax", type=click.IntRange(1, INT64_MAX), default=40, show_default=True, help="Largest modulus for the menon table.")
@click.option("--bound", type=click.IntRange(1, INT64_MAX), default=60, show_default=True, help="Product bound for the multiplicativity scan.")
@output_options
@guard_errors
def report_command(kind, k, xs, tol, prime_count, experimental, nmax, bound, fmt, out, threads, no_meta):
    """Generate a machine-readable report (deterministic with --no-meta)."""
    meta = not no_meta
    if kind == "average":
        k = _int64(k if k is not None else 1, "-k")
        if not xs:
            raise click.UsageError("report average needs --xs")
        try:
            ends = [int(part) for part in xs.split(",") if part.strip()]
        except ValueError as exc:
            raise click.UsageError(f"--xs must be comma-separated integers: {exc}")
        try:
            rows = averaging.averaging_report(k, ends, tol=tol, threads=threads)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        records = [
            {
                "x": r.x,
                "partial_sum": r.partial_sum,
                "main_term": r.main_term,
                "rel_error": r.rel_error,
                "error_ratio": r.error_ratio,
            }
            for r in rows
        ]
        _emit(render(records, ["x", "partial_sum", "main_term", "rel_error", "error_ratio"], fmt, meta), out)
        return

    if kind == "constants":
        k = _int64(k if k is not None else 2, "-k")
        if tol <= 0:
            raise click.UsageError("--tol must be positive")
        constant = averaging.euler_constant(k, tol)
        records = [
            {
                "form": "euler_product",
                "k": k,
                "value": constant.value,
                "prime_bound": constant.prime_bound,
                "tail_bound": constant.tail_bound,
            }
        ]
        if k in (2, 4):
            corollary = averaging.corollary_constant(k, tol)
            records.append(
                {
                    "form": "corollary_product",
                    "k": k,
                    "value": corollary.value,
                    "prime_bound": corollary.prime_bound,
                    "tail_bound": corollary.tail_bound,
                }
            )
        _emit(render(records, ["form", "k", "value", "prime_bound", "tail_bound"], fmt, meta), out)
        return

    if kind == "minimal-order":
        k = _int64(k if k is not None else 1, "-k")
        if k % 2 == 0 and not experimental:
            raise click.UsageError("minimal-order asserts a limit for odd k only; pass --experimental for even k")
        try:
            rows = averaging.minimal_order_scan(k, prime_count, experimental=experimental)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        records = [
            {"primes": i, "primorial": n, "ratio": ratio}
            for i, (n, ratio) in enumerate(rows, start=3)
        ]
        _emit(render(records, ["primes", "primorial", "ratio"], fmt, meta), out)
        return

    if kind == "menon":
        k = _int64(k if k is not None else 2, "-k")
        rows = menon.psi_table(k, nmax)
        records = [
            {"k": r.k, "n": r.n, "lhs": r.lhs, "phi_k": r.phi_k, "psi": r.psi, "integral": r.integral}
            for r in rows
        ]
        _emit(render(records, ["k", "n", "lhs", "phi_k", "psi", "integral"], fmt, meta), out)
        return

    k = _int64(k if k is not None else 2, "-k")
    rows = menon.psi_multiplicativity_scan(k, bound)
    records = [
        {"m": r.m, "n": r.n, "psi_m_psi_n": r.separate, "psi_mn": r.combined, "equal": r.equal}
        for r in rows
    ]
    _emit(render(records, ["m", "n", "psi_m_psi_n", "psi_mn", "equal"], fmt, meta), out)


if __name__ == "__main__":
    main()
