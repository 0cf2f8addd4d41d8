"""Multiplier coefficients C_alpha(x) = phi_x(chi_alpha) / dim(r_alpha) and their decay.

``C_alpha(x) = prod_i A_{l_i}(sqrt x) / A_{l_i}(sqrt N)`` depends only on the
a-block lengths of alpha, so shell computations work on block profiles and
count the ``(s-1)^(K-1)`` z-decorations instead of materialising every word.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .chebyshev import GRID_DENOMINATOR, decay_ratio
from .characters import require_s_word
from .words import Word, block_profiles, enumerate_ball, length_L

__all__ = [
    "QueryRangeError",
    "CoefficientQuery",
    "Shell",
    "DecayProfile",
    "coefficient",
    "block_coefficient",
    "shell_max_profile",
    "fit_exponential_bound",
    "recheck_bound",
    "n4_shell_profile",
    "per_factor_bound",
    "convergence_sweep",
]

REL_SLACK = 1e-12


class QueryRangeError(ValueError):
    """Raised when x (or N) falls outside the domain an operation accepts."""


@dataclass(frozen=True)
class CoefficientQuery:
    N: int
    s: int
    x: float

    def __post_init__(self) -> None:
        if self.N < 2:
            raise QueryRangeError(f"N must be >= 2, got {self.N}")
        if self.s < 1:
            raise QueryRangeError(f"s must be >= 1, got {self.s}")
        if not 0 < self.x <= self.N:
            raise QueryRangeError(f"x must lie in (0, {self.N}], got {self.x}")

    @property
    def guaranteed(self) -> bool:
        """Whether decay to 0 is actually proven for this (N, x)."""
        if self.N >= 5:
            return 4 < self.x < self.N
        if self.N == 4:
            return 0 < self.x < 4
        return False


@dataclass(frozen=True)
class Shell:
    ell: int
    shell_max: float
    shell_count: int


@dataclass
class DecayProfile:
    N: int
    s: int
    x: float
    R: int
    shells: list[Shell]
    fitted_c: float | None = None
    guaranteed: bool = False
    factor_bound: float | None = None  # max per-factor |ratio|, reported for N = 4
    notes: list[str] = field(default_factory=list)

    def bound_at(self, ell: int) -> float | None:
        if self.fitted_c is None:
            return None
        return (self.x / self.N) ** (self.fitted_c / 2 * ell)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "s": self.s,
            "x": self.x,
            "R": self.R,
            "guaranteed": self.guaranteed,
            "fitted_c": self.fitted_c,
            "factor_bound": self.factor_bound,
            "shells": [
                {"ell": sh.ell, "shell_count": sh.shell_count, "shell_max": sh.shell_max}
                for sh in self.shells
            ],
        }

    def to_csv(self, fmt=repr) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["ell", "shell_count", "shell_max", "bound_at_c"])
        for sh in self.shells:
            bound = self.bound_at(sh.ell)
            writer.writerow([sh.ell, sh.shell_count, fmt(sh.shell_max), "" if bound is None else fmt(bound)])
        return buf.getvalue()


def block_coefficient(blocks: Sequence[int], x: float, N: int) -> float:
    if not 0 < x <= N:
        raise QueryRangeError(f"x must lie in (0, {N}], got {x}")
    if x == N:
        return 1.0
    sx, sn = math.sqrt(x), math.sqrt(N)
    out = 1.0
    # fixed factor order: the value depends on the block multiset only, bit for bit
    for L in sorted(blocks):
        out *= decay_ratio(L, sx, sn)
    return out


def coefficient(alpha: Word, query: CoefficientQuery) -> float:
    require_s_word(alpha)
    if alpha.s != query.s:
        raise ValueError(f"word has s={alpha.s}, query has s={query.s}")
    return block_coefficient(alpha.blocks, query.x, query.N)


def _shells(query: CoefficientQuery, R: int) -> list[Shell]:
    if R < 0:
        raise QueryRangeError(f"R must be nonnegative, got {R}")
    best: dict[int, float] = {0: 1.0}
    count: dict[int, int] = {0: 1}
    for blocks in block_profiles(R, query.s):
        ell = sum(blocks)
        c = abs(block_coefficient(blocks, query.x, query.N))
        best[ell] = max(best.get(ell, 0.0), c)
        count[ell] = count.get(ell, 0) + (query.s - 1) ** (len(blocks) - 1)
    return [Shell(ell, best[ell], count[ell]) for ell in range(0, R + 1, 2)]


def shell_max_profile(query: CoefficientQuery, R: int) -> DecayProfile:
    """Per even length ell <= R: max |C_alpha(x)| over the shell L(alpha) = ell, and its size."""
    profile = DecayProfile(query.N, query.s, query.x, R, _shells(query, R), guaranteed=query.guaranteed)
    if not query.guaranteed:
        profile.notes.append("no paper guarantee")
    return profile


def _check_fit_window(query: CoefficientQuery) -> None:
    if query.N < 5 or not 4 < query.x < query.N:
        raise QueryRangeError(
            f"exponential bound needs N >= 5 and 4 < x < N, got N={query.N}, x={query.x}"
        )


def recheck_bound(query: CoefficientQuery, R: int, c: float, words: Iterable[Word] | None = None) -> bool:
    """Check C_alpha <= (x/N)^(c/2 L(alpha)) on every ball word with 2 <= L <= R."""
    if words is None:
        words = enumerate_ball(R, query.s)
    for w in words:
        ell = length_L(w)
        if ell < 2:
            continue
        bound = (query.x / query.N) ** (c / 2 * ell)
        if coefficient(w, query) > bound * (1 + REL_SLACK):
            return False
    return True


def fit_exponential_bound(query: CoefficientQuery, R: int) -> float | None:
    """Largest c on the 1/1024 grid in (0, 1] bounding the coefficient net on B_R."""
    _check_fit_window(query)
    log_base = math.log(query.x / query.N)
    profiles = list(block_profiles(R, query.s))
    c_max = 1.0
    for blocks in profiles:
        coeff = block_coefficient(blocks, query.x, query.N)
        c_max = min(c_max, 2 * math.log(coeff) / (sum(blocks) * log_base))
    k = min(GRID_DENOMINATOR, math.floor(c_max * GRID_DENOMINATOR + 1e-9))

    def feasible(c: float) -> bool:
        return all(
            block_coefficient(b, query.x, query.N)
            <= (query.x / query.N) ** (c / 2 * sum(b)) * (1 + REL_SLACK)
            for b in profiles
        )

    while k >= 1 and not feasible(k / GRID_DENOMINATOR):
        k -= 1
    return k / GRID_DENOMINATOR if k >= 1 else None


def per_factor_bound(x: float, N: int, max_block: int) -> float:
    """max over 1 <= l <= max_block of |A_l(sqrt x) / A_l(sqrt N)|."""
    return max(abs(block_coefficient((L,), x, N)) for L in range(1, max_block + 1))


def n4_shell_profile(s: int, x: float, R: int) -> DecayProfile:
    if not 0 < x < 4:
        raise QueryRangeError(f"x must lie in (0, 4) for N = 4, got {x}")
    query = CoefficientQuery(4, s, x)
    profile = shell_max_profile(query, R)
    profile.factor_bound = per_factor_bound(x, 4, max(R, 1))
    return profile


def convergence_sweep(alpha: Word, N: int, xs: Sequence[float]) -> list[tuple[float, float]]:
    """``(x, 1 - C_alpha(x))`` along ``xs``."""
    require_s_word(alpha)
    return [(x, 1.0 - block_coefficient(alpha.blocks, x, N)) for x in xs]
