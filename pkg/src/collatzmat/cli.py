"""Command-line front end.

Subcommands: shape, render, classify, rank, scan, table, verify.  Exit codes
follow one convention everywhere: 0 success, 1 usage or bad input, 2 a
property/conjecture violation was found, 3 an I/O or resource failure.
"""

import sys

import click

from collatzmat import __version__
from collatzmat.criterion import NumberClass, rank as rank_of
from collatzmat.matrices import big_shape, little_shape, standard_shape
from collatzmat.numth import FactorizationTimeout
from collatzmat.render import FORMATS as RENDER_FORMATS, MATRICES, render as render_matrix
from collatzmat.scan import DEFAULT_BLOCK_SIZE, CheckpointMismatch, scan_range
from collatzmat.symmetry import classify as classify_symmetry
from collatzmat.tables import FORMATS as TABLE_FORMATS, emit_table, rank_display
from collatzmat.verify import SUITES, run_suite


class Violation(click.ClickException):
    """A verification suite found counterexamples."""

    exit_code = 2


class IoFailure(click.ClickException):
    """Filesystem or resource trouble outside the caller's arguments."""

    exit_code = 3


def _odd_argument(value: str) -> int:
    try:
        a = int(value)
    except ValueError:
        raise click.UsageError(f"expected an integer, got {value!r}")
    if a < 1 or a % 2 == 0:
        raise click.UsageError(f"expected an odd positive integer, got {a}")
    return a


@click.group()
@click.version_option(version=__version__, prog_name="collatzmat")
def cli() -> None:
    """Structure of generalized Collatz maps: matrices, symmetry, criteria."""


@cli.command()
@click.argument("a")
def shape(a: str) -> None:
    """Shapes, symmetry, rank, and class for the matrices of f_A."""
    a = _odd_argument(a)
    m_c, n_c = standard_shape(a)
    m_l, n_l = little_shape(a)
    m_b, n_b = big_shape(a)
    sym = classify_symmetry(a)
    crit = (m_c - 1) % n_c == 0
    if a == 1:
        cls = NumberClass.UNIT
    else:
        from collatzmat.criterion import classify_number

        cls = classify_number(a)
    click.echo(f"a = {a}")
    click.echo(f"standard: {m_c} x {n_c}")
    click.echo(f"little:   {m_l} x {n_l}")
    click.echo(f"big:      {m_b} x {n_b}")
    click.echo(f"symmetry: {sym.label}")
    click.echo(f"rank:     {rank_display(m_c - 1, n_c)} ({m_c - 1}/{n_c})")
    click.echo(f"criterion: {'holds' if crit else 'fails'}")
    click.echo(f"class:    {cls}")


@cli.command("render")
@click.argument("a")
@click.option("--matrix", "-m", type=click.Choice(MATRICES), default="standard")
@click.option("--rows", type=int, default=None, help="Row limit (required for tree).")
@click.option("--cols", type=int, default=None, help="Column limit (required for tree).")
@click.option("--format", "fmt", type=click.Choice(RENDER_FORMATS), default="ascii")
@click.option("--color", is_flag=True, help="ANSI colors in ascii output.")
def render_cmd(a: str, matrix: str, rows: int | None, cols: int | None, fmt: str, color: bool) -> None:
    """Render one matrix window of f_A with K/P/U/axis markers."""
    a = _odd_argument(a)
    try:
        text = render_matrix(a, matrix, rows=rows, cols=cols, fmt=fmt, color=color)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(text, nl=False)


@cli.command("classify")
@click.argument("a")
def classify_cmd(a: str) -> None:
    """Symmetry label and raw pattern flags of the standard matrix of f_A."""
    a = _odd_argument(a)
    sym = classify_symmetry(a)
    flags = ", ".join(
        f"{name}={'yes' if value else 'no'}" for name, value in sym.flags._asdict().items()
    )
    click.echo(f"{sym.label} ({flags})")


@cli.command("rank")
@click.argument("a")
def rank_cmd(a: str) -> None:
    """Exact rank (m_C - 1)/n_C of f_A."""
    a = _odd_argument(a)
    if a < 3:
        raise click.UsageError("rank requires a >= 3 (a = 1 is the Unit)")
    r = rank_of(a)
    click.echo(f"{rank_display(r.numerator, r.denominator)} ({r.numerator}/{r.denominator})")


@cli.command("scan")
@click.option("--from", "from_a", type=int, required=True, help="Lower end of the a range.")
@click.option("--to", "to_a", type=int, required=True, help="Upper end of the a range.")
@click.option("--out", "out_path", required=True, help="Output JSON Lines path.")
@click.option("--checkpoint", "checkpoint_path", default=None, help="Checkpoint JSON path.")
@click.option("--workers", type=int, default=1, help="Parallel record workers.")
@click.option("--block-size", type=int, default=DEFAULT_BLOCK_SIZE, help="Records per checkpoint block.")
def scan_cmd(from_a: int, to_a: int, out_path: str, checkpoint_path: str | None, workers: int, block_size: int) -> None:
    """Scan odd a in [FROM, TO], one ScanRecord JSON line per a."""
    try:
        summary = scan_range(
            from_a,
            to_a,
            out_path,
            checkpoint_path=checkpoint_path,
            workers=workers,
            block_size=block_size,
        )
    except (ValueError, CheckpointMismatch) as exc:
        raise click.UsageError(str(exc))
    except OSError as exc:
        raise IoFailure(f"scan I/O failed: {exc}")
    tally = ", ".join(f"{k}={v}" for k, v in summary.class_counts.items())
    click.echo(
        f"scanned a in [{summary.from_a}, {summary.to_a}]: "
        f"{summary.records_written} records, {summary.bytes_written} bytes -> {out_path}"
    )
    if tally:
        click.echo(f"classes: {tally}")


@cli.command("table")
@click.argument("table_id", type=int)
@click.option("--bound", type=int, default=None, help="Override the table's default bound.")
@click.option("--format", "fmt", type=click.Choice(TABLE_FORMATS), default="csv")
def table_cmd(table_id: int, bound: int | None, fmt: str) -> None:
    """Emit reproduction table TABLE_ID (1-5)."""
    try:
        text = emit_table(table_id, bound=bound, fmt=fmt)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(text, nl=False)


@cli.command("verify")
@click.option("--suite", type=click.Choice(SUITES), required=True)
@click.option("--bound", type=int, default=None, help="Scan bound (suite-specific default).")
def verify_cmd(suite: str, bound: int | None) -> None:
    """Run a verification suite; exit 2 if any violation is found."""
    if bound is not None and bound < 2:
        raise click.UsageError(f"bound must be >= 2, got {bound}")
    try:
        result = run_suite(suite, bound)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    except FactorizationTimeout as exc:
        raise IoFailure(f"verification ran out of factoring budget: {exc}")
    click.echo(f"suite {result.suite} (bound {result.bound})")
    for line in result.lines:
        click.echo(f"  {line}")
    if not result.ok:
        for violation in result.violations:
            click.echo(f"  VIOLATION {violation}")
        raise Violation(f"suite {suite} found {len(result.violations)} violating check(s)")
    click.echo("  all checks passed")


def main(argv: list[str] | None = None) -> int:
    """Run the CLI with the documented exit-code convention."""
    try:
        cli.main(args=argv, prog_name="collatzmat", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except (Violation, IoFailure) as exc:
        exc.show()
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except OSError as exc:
        click.echo(f"I/O failure: {exc}", err=True)
        return 3
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
