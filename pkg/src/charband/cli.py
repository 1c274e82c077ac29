"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal
consistency failure (a character that should be a representation is not).
Errors are also written to stderr as a one-line JSON record.
"""

from __future__ import annotations

import json
import sys
from importlib import resources

import click

from . import cache as cache_mod
from .bands import MAX_BAND, bk_band, fourth_band_complex, verify_suite
from .branching import group_for_parity, trivial_multiplicity
from .dk import ConsistencyError, conf_family, der_char, gr_f_family, x1_series
from .operads import lie_char
from .partitions import partitions_upto
from .report import (
    FORMATS,
    band_table,
    family_rows,
    haut_table,
    lie_rows,
    lie_text,
    parse_row,
    t_table,
    x1_table,
)

EXIT_USAGE, EXIT_VERIFY, EXIT_CONSISTENCY = 1, 2, 3


class VerificationFailed(Exception):
    pass


def _setup(ctx: click.Context, no_cache: bool) -> None:
    store = cache_mod.Cache(enabled=not no_cache)
    cache_mod.activate(None if no_cache else store)
    ctx.obj = store


def _warn_cache(ctx: click.Context) -> None:
    for msg in ctx.obj.warnings:
        click.echo(f"warning: {msg}", err=True)


format_opt = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)
parity_opt = click.option("--parity", type=click.Choice(["odd", "even"]), default="odd", show_default=True)


@click.group()
@click.option("--no-cache", is_flag=True, help="Recompute everything and do not touch the cache.")
@click.pass_context
def main(ctx: click.Context, no_cache: bool) -> None:
    """Characters of Drinfel'd-Kohno Lie algebras and the embedding calculus E^1-page."""
    _setup(ctx, no_cache)


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise click.BadParameter(f"must be between {lo} and {hi}", param_hint=name)


# ----------------------------------------------------------------- tables


def render_lie(max_s: int, fmt: str) -> str:
    table = {s: lie_char(s) for s in range(1, max_s + 1)}
    if fmt == "text":
        return lie_text(table)
    rows = lie_rows(table)
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    lines = ["s,lambda,mult"]
    for r in rows:
        for t in r["terms"]:
            lines.append(f"{r['s']},\"{tuple(t['lambda'])}\",{t['mult']}")
    return "\n".join(lines) + "\n"


def render_dk(k: int, s_max: int | None, truncation: int | None, parity: str, fmt: str, row: str | None) -> str:
    s_max = max(6 - k, 0) if s_max is None else s_max
    N_max = k + 4 if truncation is None else truncation
    fam = gr_f_family(k, s_max, N_max, parity)
    rows = [parse_row(row)] if row is not None else list(partitions_upto(s_max))
    return t_table(family_rows(fam, k, rows, N_max), fmt, k)


def render_conf(k: int, parity: str, fmt: str, row: str | None) -> str:
    fam = conf_family(k, parity)
    rows = [parse_row(row)] if row is not None else list(partitions_upto(k))
    return t_table(family_rows(fam, k, rows), fmt, k)


def render_band(r: int, parity: str, fmt: str, row: str | None) -> str:
    band = bk_band(r, parity)
    rows = [parse_row(row)] if row is not None else None
    return band_table(band, fmt, rows)


def render_haut(s_max: int, parity: str, fmt: str) -> str:
    group = group_for_parity(parity)
    entries = []
    for s in range(1, s_max + 1):
        plain, omega_ = der_char(s, "plain", parity), der_char(s, "omega", parity)
        entries.append({
            "s": s,
            "plain": plain,
            "omega": omega_,
            "plain_inv": trivial_multiplicity(plain, group),
            "omega_inv": trivial_multiplicity(omega_, group),
        })
    return haut_table(entries, fmt)


def render_fourth(parity: str, fmt: str) -> str:
    summary = fourth_band_complex(parity)
    if fmt == "json":
        return json.dumps({
            "dims": list(summary.dims),
            "degrees": [f"{a}n{b:+d}" for a, b in summary.degrees],
            "euler": summary.euler,
            "eigenvalue": summary.eigenvalue,
        }, indent=1) + "\n"
    if fmt == "csv":
        lines = ["degree,dim"] + [f"{a}n{b:+d},{d}" for (a, b), d in zip(summary.degrees, summary.dims)]
        return "\n".join(lines) + "\n"
    chain = " <- ".join(f"Q^{d}" for d in summary.dims)
    lo, hi = summary.degrees[0], summary.degrees[-1]
    return (
        f"{chain}\n"
        f"degrees {lo[0]}n{lo[1]:+d} .. {hi[0]}n{hi[1]:+d}\n"
        f"euler characteristic {summary.euler}\n"
        f"reflection eigenvalue {summary.eigenvalue:+d}\n"
    )


@main.command("lie-table")
@click.option("--max", "max_s", type=int, default=6, show_default=True)
@format_opt
@click.pass_context
def lie_table_cmd(ctx, max_s, fmt):
    """Decompositions of Lie(s) into irreducibles."""
    _check_range("--max", max_s, 1, 12)
    click.echo(render_lie(max_s, fmt), nl=False)


@main.command("dk-table")
@click.option("--k", type=int, required=True)
@click.option("--s-max", type=int, default=None, help="Largest |lambda| (default 6 - k).")
@click.option("--truncation", type=int, default=None, help="Largest T-exponent (default k + 4).")
@click.option("--row", default=None, help="Only this partition, e.g. '2,1'.")
@parity_opt
@format_opt
@click.pass_context
def dk_table_cmd(ctx, k, s_max, truncation, row, parity, fmt):
    """Coefficients of gr f(s, k) in normalized degrees."""
    _check_range("--k", k, 1, 8)
    if s_max is not None:
        _check_range("--s-max", s_max, 0, 8)
    if truncation is not None:
        _check_range("--truncation", truncation, 0, 16)
    click.echo(render_dk(k, s_max, truncation, parity, fmt, row), nl=False)
    _warn_cache(ctx)


@main.command("conf-table")
@click.option("--k", type=int, required=True)
@click.option("--row", default=None)
@click.option("--parity", type=click.Choice(["odd", "even"]), default="even", show_default=True)
@format_opt
@click.pass_context
def conf_table_cmd(ctx, k, row, parity, fmt):
    """Cohomology of products relative to the diagonals, by label weight."""
    _check_range("--k", k, 1, 8)
    click.echo(render_conf(k, parity, fmt, row), nl=False)
    _warn_cache(ctx)


@main.command("bk-band")
@click.option("--r", "r", type=int, required=True)
@click.option("--row", default=None)
@parity_opt
@format_opt
@click.pass_context
def bk_band_cmd(ctx, r, row, parity, fmt):
    """One band of the Bousfield-Kan E^1-page, row by row."""
    _check_range("--r", r, 1, MAX_BAND)
    click.echo(render_band(r, parity, fmt, row), nl=False)
    _warn_cache(ctx)


@main.command("haut")
@click.option("--s-max", type=int, default=4, show_default=True)
@parity_opt
@format_opt
def haut_cmd(s_max, parity, fmt):
    """Derivations of the free Lie algebra as Schur functors, with invariant dimensions."""
    _check_range("--s-max", s_max, 1, 8)
    click.echo(render_haut(s_max, parity, fmt), nl=False)


@main.command("x1")
@click.option("--truncation", type=int, default=3, show_default=True)
@parity_opt
@format_opt
def x1_cmd(truncation, parity, fmt):
    """The series P and Q for the low-degree homotopy of X_1."""
    _check_range("--truncation", truncation, 1, 6)
    click.echo(x1_table(x1_series(parity, truncation), fmt), nl=False)


@main.command("fourth-band")
@parity_opt
@format_opt
@click.pass_context
def fourth_band_cmd(ctx, parity, fmt):
    """Trivial-isotypic chain complex of the fourth band."""
    click.echo(render_fourth(parity, fmt), nl=False)


# ------------------------------------------------------------------ verify


def golden_outputs(max_band: int) -> dict[str, str]:
    out = {"lie-table.txt": render_lie(6, "text")}
    for k in range(2, 7):
        out[f"dk-table-k{k}.txt"] = render_dk(k, None, None, "odd", "text", None)
    for k in range(2, 5):
        out[f"conf-table-k{k}.txt"] = render_conf(k, "even", "text", None)
    for r in range(1, max_band + 1):
        out[f"bk-band-r{r}.txt"] = render_band(r, "odd", "text", None)
    out["haut.txt"] = render_haut(4, "odd", "text")
    for par in ("odd", "even"):
        out[f"x1-{par}.txt"] = x1_table(x1_series(par, 3), "text")
    if max_band >= 4:
        out["fourth-band.txt"] = render_fourth("odd", "text")
    return out


def _golden(name: str) -> str | None:
    try:
        return resources.files("charband").joinpath("golden", name).read_text()
    except FileNotFoundError:
        return None


@main.command("verify")
@click.option("--max-band", type=int, default=MAX_BAND, show_default=True)
@click.option("--max-k", type=int, default=5, show_default=True)
@click.pass_context
def verify_cmd(ctx, max_band, max_k):
    """Run the consistency checks and compare every table with its golden file."""
    _check_range("--max-band", max_band, 1, MAX_BAND)
    _check_range("--max-k", max_k, 2, 5)
    failed = False
    for res in verify_suite(max_k=max_k, max_band=max_band):
        status = "PASS" if res.passed else "FAIL"
        click.echo(f"{status} {res.name}")
        for f in res.failures:
            click.echo(f"  {f}")
        failed |= not res.passed
    for name, text in golden_outputs(max_band).items():
        want = _golden(name)
        if want is None:
            click.echo(f"FAIL golden {name}: missing")
            failed = True
        elif want != text:
            click.echo(f"FAIL golden {name}: output differs")
            failed = True
        else:
            click.echo(f"PASS golden {name}")
    _warn_cache(ctx)
    if failed:
        raise VerificationFailed("verification failed")


def _error(kind: str, message: str, code: int) -> int:
    click.echo(json.dumps({"error": kind, "message": message}), err=True)
    return code


def run(argv: list[str] | None = None) -> int:
    """Entry point returning an exit status instead of raising SystemExit."""
    try:
        main.main(args=argv, prog_name="charband", standalone_mode=False)
    except click.exceptions.Abort:
        return _error("usage", "aborted", EXIT_USAGE)
    except click.UsageError as exc:
        return _error("usage", exc.format_message(), EXIT_USAGE)
    except click.ClickException as exc:
        return _error("usage", exc.format_message(), EXIT_USAGE)
    except ValueError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except VerificationFailed as exc:
        return _error("verification", str(exc), EXIT_VERIFY)
    except ConsistencyError as exc:
        return _error("consistency", str(exc), EXIT_CONSISTENCY)
    return 0


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
