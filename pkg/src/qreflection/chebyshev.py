"""Dilated Chebyshev polynomials A_t, the S_N^+ character polynomials Pi_t,
and exact / floating-point evaluation helpers.

``A_0 = 1``, ``A_1 = X`` and ``X * A_t = A_{t+1} + A_{t-1}``.  They relate to
the classical second-kind family by ``A_t(2x) = U_t(x)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "QuadraticInteger",
    "cheb_a_poly",
    "cheb_a_eval_quadint",
    "cheb_a_eval_float",
    "cheb_a_signed_log",
    "pi_poly",
    "decay_ratio",
    "fit_decay_constant",
    "trig_ratio_check",
    "exact_eval",
    "product",
    "GRID_DENOMINATOR",
]

GRID_DENOMINATOR = 1024


class IntPolynomial:
    """Univariate polynomial with exact integer coefficients, lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[int, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for deg in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[deg]
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                mono = "X" if deg == 1 else f"X^{deg}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def _coerce(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        # Horner; works for int, Fraction, float and QuadraticInteger alike.
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def substitute_square(self) -> IntPolynomial:
        """Return p(X^2)."""
        out = [0] * (2 * len(self._coeffs))
        for i, c in enumerate(self._coeffs):
            out[2 * i] = c
        return IntPolynomial(out)

    def has_parity(self, parity: int) -> bool:
        """True if every nonzero coefficient sits at a degree congruent to ``parity`` mod 2."""
        return all(c == 0 for i, c in enumerate(self._coeffs) if i % 2 != parity % 2)


class QuadraticInteger:
    """Exact element ``rational_part + root_part * sqrt(radicand)`` of Z[sqrt(N)].

    Parts are kept formally; for perfect-square radicands equality compares the
    actual integer value, so ``2 + 0*sqrt(4) == 0 + 1*sqrt(4)``.
    """

    __slots__ = ("rational_part", "root_part", "radicand")

    def __init__(self, rational_part: int, root_part: int, radicand: int) -> None:
        if radicand < 1:
            raise ValueError(f"radicand must be positive, got {radicand}")
        self.rational_part = int(rational_part)
        self.root_part = int(root_part)
        self.radicand = int(radicand)

    @classmethod
    def sqrt(cls, n: int) -> QuadraticInteger:
        return cls(0, 1, n)

    def _square_root(self) -> int | None:
        r = math.isqrt(self.radicand)
        return r if r * r == self.radicand else None

    def _key(self) -> tuple[int, int]:
        r = self._square_root()
        if r is not None:
            return (self.rational_part + self.root_part * r, 0)
        return (self.rational_part, self.root_part)

    def _check(self, other: QuadraticInteger) -> None:
        if other.radicand != self.radicand:
            raise ValueError(
                f"radicand mismatch: sqrt({self.radicand}) vs sqrt({other.radicand})"
            )

    def _coerce(self, other) -> QuadraticInteger:
        if isinstance(other, QuadraticInteger):
            self._check(other)
            return other
        if isinstance(other, int):
            return QuadraticInteger(other, 0, self.radicand)
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadraticInteger({self.rational_part}, {self.root_part}, {self.radicand})"

    def __str__(self) -> str:
        if self.root_part == 0:
            return str(self.rational_part)
        root = f"{self.root_part}*sqrt({self.radicand})"
        if self.rational_part == 0:
            return root
        return f"{self.rational_part} {'+' if self.root_part > 0 else '-'} {abs(self.root_part)}*sqrt({self.radicand})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._key() == (other, 0)
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        return self.radicand == other.radicand and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((self.radicand, self._key()))

    def __add__(self, other) -> QuadraticInteger:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticInteger(
            self.rational_part + other.rational_part,
            self.root_part + other.root_part,
            self.radicand,
        )

    __radd__ = __add__

    def __neg__(self) -> QuadraticInteger:
        return QuadraticInteger(-self.rational_part, -self.root_part, self.radicand)

    def __sub__(self, other) -> QuadraticInteger:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QuadraticInteger:
        return (-self) + other

    def __mul__(self, other) -> QuadraticInteger:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p1, q1, p2, q2 = self.rational_part, self.root_part, other.rational_part, other.root_part
        return QuadraticInteger(p1 * p2 + self.radicand * q1 * q2, p1 * q2 + q1 * p2, self.radicand)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self._key()[1] == 0

    def to_int(self) -> int:
        """Integer value; raises ValueError when the value is irrational."""
        p, q = self._key()
        if q != 0:
            raise ValueError(f"{self} is not an integer")
        return p

    def __float__(self) -> float:
        return self.rational_part + self.root_part * math.sqrt(self.radicand)


@lru_cache(maxsize=None)
def _a_coeffs(t: int) -> tuple[int, ...]:
    prev, cur = (1,), (0, 1)
    if t == 0:
        return prev
    for _ in range(t - 1):
        nxt = [0] + list(cur)
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, tuple(nxt)
    return cur


def cheb_a_poly(t: int) -> IntPolynomial:
    """A_t via ``A_{t+1} = X A_t - A_{t-1}``."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return IntPolynomial(_a_coeffs(t))


def cheb_a_eval_quadint(t: int, n: int) -> QuadraticInteger:
    """Exact A_t(sqrt(n)) in Z[sqrt(n)]."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    x = QuadraticInteger.sqrt(n)
    prev, cur = QuadraticInteger(1, 0, n), x
    if t == 0:
        return prev
    for _ in range(t - 1):
        prev, cur = cur, x * cur - prev
    return cur


def cheb_a_signed_log(t: int, x: float) -> tuple[int, float]:
    """Return ``(sign, log|A_t(x)|)`` for ``x >= 0``; sign is 0 at a root.

    Overflow-free for large ``t`` on the branch ``x > 2``.
    """
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if t == 0:
        return 1, 0.0
    if x > 2.0:
        q = (x + math.sqrt(x * x - 4.0)) / 2.0
        log_q = math.log(q)
        # A_t = q^t (1 - q^{-2t-2}) / (1 - q^{-2})
        return 1, t * log_q + math.log1p(-math.exp(-(2 * t + 2) * log_q)) - math.log1p(-math.exp(-2 * log_q))
    if x == 2.0:
        return 1, math.log(t + 1)
    theta = math.acos(x / 2.0)
    value = math.sin((t + 1) * theta) / math.sin(theta)
    if value == 0.0:
        return 0, -math.inf
    return (1 if value > 0 else -1), math.log(abs(value))


def cheb_a_eval_float(t: int, x: float) -> float:
    """Floating-point A_t(x), x >= 0, branch-split at x = 2."""
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if t == 0:
        return 1.0
    if x == 2.0:
        return float(t + 1)
    if x < 2.0:
        theta = math.acos(x / 2.0)
        return math.sin((t + 1) * theta) / math.sin(theta)
    sign, log_abs = cheb_a_signed_log(t, x)
    return sign * math.exp(log_abs)


@lru_cache(maxsize=None)
def _pi_coeffs(t: int) -> tuple[int, ...]:
    if t == 0:
        return (1,)
    prev, cur = IntPolynomial((1,)), IntPolynomial((-1, 1))
    for _ in range(t - 1):
        # Pi_{t+1} = (Pi_1 - 1) Pi_t - Pi_{t-1}
        prev, cur = cur, IntPolynomial((-2, 1)) * cur - prev
    return cur.coefficients


def pi_poly(t: int) -> IntPolynomial:
    """Character polynomial Pi_t of S_N^+: ``Pi_1 Pi_t = Pi_{t+1} + Pi_t + Pi_{t-1}``."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return IntPolynomial(_pi_coeffs(t))


def decay_ratio(t: int, x: float, n: float) -> float:
    """A_t(x) / A_t(n) for 0 < x < n.

    Signed: for x < 2 the numerator can be negative or zero.
    """
    if not 0 < x < n:
        raise ValueError(f"x must lie in (0, {n}), got {x}")
    sx, lx = cheb_a_signed_log(t, x)
    sn, ln = cheb_a_signed_log(t, n)
    if sx == 0:
        return 0.0
    if sn == 0:
        raise ZeroDivisionError(f"A_{t} vanishes at {n}")
    return sx * sn * math.exp(lx - ln)


def _max_feasible_c(x: float, n: float, t_max: int) -> float:
    log_base = math.log(x / n)
    best = 1.0
    for t in range(1, t_max + 1):
        _, lx = cheb_a_signed_log(t, x)
        _, ln = cheb_a_signed_log(t, n)
        # log ratio <= c * t * log_base  <=>  c <= (log ratio) / (t * log_base)
        best = min(best, (lx - ln) / (t * log_base))
    return best


def fit_decay_constant(x: float, n: float, t_max: int) -> float | None:
    """Largest c on the 1/1024 grid in (0, 1] with A_t(x)/A_t(n) <= (x/n)^(c t) for 1 <= t <= t_max."""
    if not 2 < x < n:
        raise ValueError(f"x must lie in (2, {n}), got {x}")
    if t_max < 1:
        raise ValueError(f"t_max must be positive, got {t_max}")
    c_max = _max_feasible_c(x, n, t_max)
    k = min(GRID_DENOMINATOR, math.floor(c_max * GRID_DENOMINATOR + 1e-9))

    def feasible(c: float) -> bool:
        return all(
            decay_ratio(t, x, n) <= (x / n) ** (c * t) * (1 + 1e-12) for t in range(1, t_max + 1)
        )

    while k >= 1 and not feasible(k / GRID_DENOMINATOR):
        k -= 1
    return k / GRID_DENOMINATOR if k >= 1 else None


def _recursion_float(t: int, x: float) -> float:
    prev, cur = 1.0, x
    if t == 0:
        return prev
    for _ in range(t - 1):
        prev, cur = cur, x * cur - prev
    return cur


def trig_ratio_check(t: int, x: float) -> tuple[float, float]:
    """Compare |A_t(x)/A_t(2)| from the recursion with the sine formula, x = 2 cos(theta)."""
    if not 0 < x < 2:
        raise ValueError(f"x must lie in (0, 2), got {x}")
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    lhs = abs(_recursion_float(t, x) / (t + 1))
    theta = math.acos(x / 2.0)
    rhs = abs(math.sin((t + 1) * theta) / math.sin(theta)) / (t + 1)
    return lhs, rhs


def exact_eval(poly: IntPolynomial, x: float | Fraction) -> Fraction:
    """Evaluate at the exact rational value of ``x``."""
    return poly(Fraction(x))


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    out = IntPolynomial.constant(1)
    for p in polys:
        out = out * p
    return out
