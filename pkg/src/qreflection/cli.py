"""
Command-line interface for qreflection.

Usage:
    qreflection fuse --s 3 --N 5 "a.z.a" "a.z^2.a"
    qreflection ball --s 2 --R 4 --N 5 --format csv
    qreflection dim --s 3 --N 7 "a.z.a^2.z.a"
    qreflection char --s 2 "a^3.z.a"
    qreflection decay --N 5 --s 3 --x 4.5 --R 8 --format json
    qreflection report --N 5 --s 2 --R 6 --word "a^2" --out report.json

Exit codes: 0 ok, 2 parse error, 3 word not in S, 4 value out of range, 5 I/O.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .characters import InvalidWordError, char_image_poly, dimension, require_s_word
from .fusion import tensor
from .haagerup import QueryRangeError
from .report import (
    build_report,
    decay_profile,
    default_x_grid,
    dimension_csv,
    dimension_rows,
    dumps,
    fmt_float,
)
from .words import Word, WordSyntaxError, length_L, parse_word

__all__ = ["main"]

EXIT_PARSE, EXIT_INVALID, EXIT_RANGE, EXIT_IO = 2, 3, 4, 5


class CliFailure(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def common_options(func):
    @click.option("--N", "N", type=int, default=None, help="Matrix size N >= 2 (default 5).")
    @click.option("--s", "s", type=int, default=2, show_default=True, help="Order of z, s >= 1.")
    @click.option("--R", "R", type=int, default=6, show_default=True, help="Even ball radius.")
    @click.option("--x", "xs", type=float, multiple=True, help="Evaluation point; repeatable.")
    @click.option("--x-grid", "x_grid", default=None, help="Comma-separated x values; '' for none.")
    @click.option(
        "--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text", show_default=True
    )
    @click.option("--out", "out", type=click.Path(dir_okay=False), default=None, help="Write here.")
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            _validate(kwargs)
            text = func(*args, **kwargs)
            _emit(text, kwargs["out"])
        except CliFailure as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(exc.code)
        except WordSyntaxError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except InvalidWordError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)
        except QueryRangeError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_RANGE)

    return wrapper


def _validate(opts: dict) -> None:
    if opts["N"] is not None and opts["N"] < 2:
        raise CliFailure(EXIT_RANGE, f"--N must be >= 2, got {opts['N']}")
    if opts["s"] < 1:
        raise CliFailure(EXIT_RANGE, f"--s must be >= 1, got {opts['s']}")
    if opts["R"] < 0 or opts["R"] % 2:
        raise CliFailure(EXIT_RANGE, f"--R must be a nonnegative even integer, got {opts['R']}")
    if opts["x_grid"] is not None:
        try:
            extra = [float(v) for v in opts["x_grid"].split(",") if v.strip()]
        except ValueError as exc:
            raise CliFailure(EXIT_PARSE, f"bad --x-grid value: {exc}") from None
        opts["xs"] = tuple(opts["xs"]) + tuple(extra)
        opts["x_grid"] = ""
    n = opts["N"] or 5
    for x in opts["xs"]:
        if not 0 < x <= n:
            raise CliFailure(EXIT_RANGE, f"x={x} outside (0, {n}]")


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliFailure(EXIT_IO, f"cannot write {out}: {exc.strerror}") from None


def _x_values(opts_xs, x_grid, N: int) -> list[float]:
    # an explicit --x-grid (even empty) overrides the default grid
    if opts_xs or x_grid is not None:
        return list(opts_xs)
    return default_x_grid(N)


def _s_word(text: str, s: int) -> Word:
    w = parse_word(text, s)
    require_s_word(w)
    return w


def _table(rows: list[dict], columns: list[str]) -> str:
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(columns, widths))]
    lines += ["  ".join(str(r[c]).ljust(wd) for c, wd in zip(columns, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines)


@click.group()
def main() -> None:
    """Fusion rules, characters and multiplier coefficients of H_N^{s+}."""


@main.command()
@click.argument("alpha")
@click.argument("beta")
@common_options
def fuse(alpha, beta, N, s, R, xs, x_grid, fmt, out):
    """Decompose ALPHA (x) BETA into irreducibles."""
    a, b = _s_word(alpha, s), _s_word(beta, s)
    result = tensor(a, b)
    balance = None
    if N is not None:
        lhs = (dimension(a, N) * dimension(b, N)).to_int()
        terms = [(dimension(w, N) * m).to_int() for w, m in reversed(list(result))]
        balance = {"N": N, "lhs": lhs, "rhs": terms, "ok": lhs == sum(terms)}
    if fmt == "json":
        doc = result.to_dict()
        if balance is not None:
            doc["balance"] = balance
        return dumps(doc)
    if fmt == "csv":
        return "word,mult\n" + "".join(f"{w},{m}\n" for w, m in result)
    text = str(result)
    if balance is not None:
        text += f"\ndim: {balance['lhs']} = {' + '.join(map(str, balance['rhs']))}"
    return text


@main.command()
@common_options
def ball(N, s, R, xs, x_grid, fmt, out):
    """List the ball B_R of S with L, K and dimension columns."""
    rows = dimension_rows(N or 5, s, R)
    if fmt == "json":
        return dumps({"N": N or 5, "s": s, "R": R, "words": rows, "count": len(rows)})
    if fmt == "csv":
        return dimension_csv(rows)
    return _table(rows, ["word", "L", "K", "dimension"]) + f"\ncount: {len(rows)}"


@main.command()
@click.argument("words", nargs=-1, required=True)
@common_options
def dim(words, N, s, R, xs, x_grid, fmt, out):
    """Exact dimensions of the given irreducibles."""
    n = N or 5
    rows = []
    for text in words:
        w = _s_word(text, s)
        rows.append({"word": str(w), "L": length_L(w), "K": w.num_blocks, "dimension": dimension(w, n).to_int()})
    if fmt == "json":
        return dumps({"N": n, "s": s, "words": rows})
    if fmt == "csv":
        return dimension_csv(rows)
    return _table(rows, ["word", "L", "K", "dimension"])


@main.command()
@click.argument("words", nargs=-1, required=True)
@common_options
def char(words, N, s, R, xs, x_grid, fmt, out):
    """Character images Q(X) = prod A_l(X) and P with P(X^2) = Q(X)."""
    rows = []
    for text in words:
        img = char_image_poly(_s_word(text, s))
        rows.append({"word": str(img.word), "Q": str(img.q_poly), "P": str(img.p_poly),
                     "Q_coefficients": list(img.q_poly.coefficients)})
    if fmt == "json":
        return dumps({"s": s, "characters": rows})
    if fmt == "csv":
        return "word,Q,P\n" + "".join(f"{r['word']},{r['Q']},{r['P']}\n" for r in rows)
    return _table(rows, ["word", "Q", "P"])


@main.command()
@common_options
def decay(N, s, R, xs, x_grid, fmt, out):
    """Shell-maximum decay profiles of the multiplier coefficients."""
    n = N or 5
    profiles = [decay_profile(n, s, x, R) for x in _x_values(xs, x_grid, n)]
    if fmt == "json":
        return dumps({"profiles": [p.to_dict() for p in profiles]})
    chunks = []
    for p in profiles:
        head = f"# N={p.N} s={p.s} x={fmt_float(p.x)} R={p.R} guaranteed={str(p.guaranteed).lower()}"
        if p.fitted_c is not None:
            head += f" fitted_c={fmt_float(p.fitted_c)}"
        if p.factor_bound is not None:
            head += f" D={fmt_float(p.factor_bound)}"
        chunks.append(head + "\n" + p.to_csv(fmt_float))
    return "".join(chunks)


@main.command()
@click.option("--word", "word_text", default="a^2", show_default=True, help="Word for the convergence sweep.")
@common_options
def report(word_text, N, s, R, xs, x_grid, fmt, out):
    """Combined JSON report: ball, dimensions, decay profiles, convergence sweep."""
    n = N or 5
    w = _s_word(word_text, s)
    return dumps(build_report(n, s, R, _x_values(xs, x_grid, n), w))


if __name__ == "__main__":
    main()
