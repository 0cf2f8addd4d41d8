"""Deterministic rendering: fixed 15-significant-digit floats, JSON and CSV tables."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Sequence

from .characters import dimension
from .haagerup import (
    CoefficientQuery,
    DecayProfile,
    convergence_sweep,
    fit_exponential_bound,
    n4_shell_profile,
    shell_max_profile,
)
from .words import Word, enumerate_ball, length_L

__all__ = [
    "fmt_float",
    "dumps",
    "decay_profile",
    "default_x_grid",
    "dimension_rows",
    "dimension_csv",
    "build_report",
]


def fmt_float(v: float) -> str:
    return f"{v:.14e}"


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written as ``fmt_float``; key order preserved."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def default_x_grid(N: int) -> list[float]:
    return [float(Fraction(N) * f) for f in (Fraction(3, 5), Fraction(4, 5), Fraction(49, 50))]


def decay_profile(N: int, s: int, x: float, R: int) -> DecayProfile:
    """Shell profile for one x, fitted where an exponential bound is proven (N >= 5, 4 < x < N)."""
    query = CoefficientQuery(N, s, x)
    if N == 4 and x < 4:
        return n4_shell_profile(s, x, R)
    profile = shell_max_profile(query, R)
    if N >= 5 and 4 < x < N:
        profile.fitted_c = fit_exponential_bound(query, R)
    return profile


def dimension_rows(N: int, s: int, R: int) -> list[dict]:
    return [
        {"word": str(w), "L": length_L(w), "K": w.num_blocks, "dimension": dimension(w, N).to_int()}
        for w in enumerate_ball(R, s)
    ]


def dimension_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["word", "L", "K", "dimension"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def build_report(N: int, s: int, R: int, xs: Sequence[float], word: Word) -> dict:
    rows = dimension_rows(N, s, R)
    shell_counts: dict[int, int] = {}
    for row in rows:
        shell_counts[row["L"]] = shell_counts.get(row["L"], 0) + 1
    return {
        "config": {"N": N, "s": s, "R": R, "x": [float(x) for x in xs], "word": str(word)},
        "ball": {
            "size": len(rows),
            "shells": [{"ell": ell, "count": n} for ell, n in sorted(shell_counts.items())],
        },
        "dimensions": rows,
        "profiles": [decay_profile(N, s, x, R).to_dict() for x in xs],
        "convergence": {
            "word": str(word),
            "sweep": [{"x": float(x), "defect": d} for x, d in convergence_sweep(word, N, xs)],
        },
    }
