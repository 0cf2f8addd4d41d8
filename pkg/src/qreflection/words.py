"""Words in the monoid M = <a, z : z^s = 1> and its fusion submonoid S.

A word is stored as its syllable tuple ``(z_0, L_1, z_1, L_2, ..., L_K, z_K)``:
a-block lengths ``L_i >= 1`` alternating with z-exponents.  Interior exponents
lie in ``{1, ..., s-1}``; the outer ones ``z_0, z_K`` may be 0.  A word with no
letter ``a`` is ``(z_0,)`` and the unit is ``(0,)``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Word",
    "SMembership",
    "WordSyntaxError",
    "parse_word",
    "normalize",
    "conjugate",
    "length_L",
    "is_valid_S",
    "concat",
    "enumerate_ball",
    "block_profiles",
    "unit",
]


class WordSyntaxError(ValueError):
    """Raised when a word spelling does not follow the token grammar."""

    def __init__(self, message: str, token: str | None = None) -> None:
        super().__init__(message)
        self.token = token


class SMembership(enum.Enum):
    UNIT = "unit"
    VALID = "valid"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class Word:
    s: int
    syllables: tuple[int, ...] = (0,)

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        syl = self.syllables
        if len(syl) % 2 != 1:
            raise ValueError(f"malformed syllables {syl}")
        for i, v in enumerate(syl):
            if i % 2 == 1:
                if v < 1:
                    raise ValueError(f"a-block length must be positive in {syl}")
            elif not 0 <= v < self.s:
                raise ValueError(f"z-exponent {v} not reduced mod {self.s}")
            elif 0 < i < len(syl) - 1 and v == 0:
                raise ValueError(f"zero interior z-exponent in {syl}")

    @property
    def blocks(self) -> tuple[int, ...]:
        """a-block lengths L_1, ..., L_K."""
        return self.syllables[1::2]

    @property
    def exponents(self) -> tuple[int, ...]:
        """Interior z-exponents J_1, ..., J_{K-1}."""
        return self.syllables[2:-1:2]

    @property
    def lead(self) -> int:
        return self.syllables[0]

    @property
    def tail(self) -> int:
        return self.syllables[-1]

    @property
    def num_blocks(self) -> int:
        return len(self.syllables) // 2

    def has_a(self) -> bool:
        return len(self.syllables) > 1

    def is_unit(self) -> bool:
        return self.syllables == (0,)

    def sort_key(self) -> tuple:
        return (sum(self.blocks), self.num_blocks, self.syllables[1:-1], self.lead, self.tail)

    def __lt__(self, other: Word) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.is_unit():
            return "1"
        tokens = []
        for i, v in enumerate(self.syllables):
            letter = "a" if i % 2 else "z"
            if v == 0:
                continue
            tokens.append(letter if v == 1 else f"{letter}^{v}")
        return ".".join(tokens)

    @classmethod
    def from_blocks(cls, blocks: Iterable[int], exponents: Iterable[int], s: int) -> Word:
        blocks, exponents = list(blocks), list(exponents)
        if len(exponents) != max(len(blocks) - 1, 0):
            raise ValueError("need exactly one z-exponent between consecutive a-blocks")
        raw: list[tuple[str, int]] = []
        for i, L in enumerate(blocks):
            if i:
                raw.append(("z", exponents[i - 1]))
            raw.append(("a", L))
        return normalize(raw, s)


def unit(s: int) -> Word:
    return Word(s, (0,))


def _normalize_syllables(raw: Iterable[tuple[str, int]], s: int) -> tuple[int, ...]:
    out = [0]
    for letter, power in raw:
        if letter == "z":
            if len(out) % 2 == 1:
                out[-1] = (out[-1] + power) % s
            else:
                out.append(power % s)
        elif letter == "a":
            if power < 0:
                raise ValueError(f"negative a-power {power}")
            if power == 0:
                continue
            if len(out) % 2 == 0:
                out[-1] += power
            elif len(out) > 1 and out[-1] == 0:
                # z^0 between two a-blocks: merge them
                out.pop()
                out[-1] += power
            else:
                out.append(power)
        else:
            raise ValueError(f"unknown letter {letter!r}")
    if len(out) % 2 == 0:
        out.append(0)
    return tuple(out)


def normalize(raw: Iterable[tuple[str, int]], s: int) -> Word:
    """Reduce a raw letter sequence ``[("a", k) | ("z", k), ...]`` using z^s = 1."""
    return Word(s, _normalize_syllables(raw, s))


def _raw(w: Word) -> list[tuple[str, int]]:
    return [("a" if i % 2 else "z", v) for i, v in enumerate(w.syllables)]


def concat(left: Word, right: Word) -> Word:
    if left.s != right.s:
        raise ValueError(f"mismatched s: {left.s} vs {right.s}")
    return normalize(_raw(left) + _raw(right), left.s)


_TOKEN = re.compile(r"^([az])(?:\^([0-9]+))?$")


def parse_word(text: str, s: int) -> Word:
    """Parse the dotted spelling, e.g. ``"a^3.z^2.a"``; ``"1"`` is the unit."""
    text = text.strip()
    if text == "1":
        return unit(s)
    if not text:
        raise WordSyntaxError("empty word", token="")
    raw = []
    for token in text.split("."):
        m = _TOKEN.match(token)
        if m is None:
            raise WordSyntaxError(f"bad token {token!r}", token=token)
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power < 1:
            raise WordSyntaxError(f"exponent must be >= 1 in token {token!r}", token=token)
        raw.append((m.group(1), power))
    return normalize(raw, s)


def conjugate(w: Word) -> Word:
    """Reverse the word and negate z-exponents mod s."""
    return Word(w.s, tuple(v if i % 2 else (-v) % w.s for i, v in enumerate(reversed(w.syllables))))


def length_L(w: Word) -> int:
    return sum(w.blocks)


def is_valid_S(w: Word) -> SMembership:
    if w.is_unit():
        return SMembership.UNIT
    if w.lead or w.tail or not w.has_a():
        return SMembership.INTERMEDIATE
    blocks = w.blocks
    if len(blocks) == 1:
        ok = blocks[0] % 2 == 0
    else:
        ok = blocks[0] % 2 == 1 and blocks[-1] % 2 == 1 and all(L % 2 == 0 for L in blocks[1:-1])
    return SMembership.VALID if ok else SMembership.INTERMEDIATE


def block_profiles(R: int, s: int) -> Iterator[tuple[int, ...]]:
    """Block tuples (L_1, ..., L_K) of nonunit S words with 2 <= sum <= R.

    Yields nothing with K >= 2 when s = 1, since no interior z-exponent exists.
    """

    def interiors(budget: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for L in range(2, budget + 1, 2):
            for rest in interiors(budget - L):
                yield (L,) + rest

    for L in range(2, R + 1, 2):
        yield (L,)
    if s == 1:
        return
    for first in range(1, R, 2):
        for mid in interiors(R - first - 1):
            used = first + sum(mid)
            for last in range(1, R - used + 1, 2):
                yield (first,) + mid + (last,)


def enumerate_ball(R: int, s: int) -> list[Word]:
    """Every element of S (unit included) with L <= R, in canonical order."""
    if R < 0:
        raise ValueError(f"R must be nonnegative, got {R}")
    words = [unit(s)]
    for blocks in block_profiles(R, s):
        for exps in itertools.product(range(1, s), repeat=len(blocks) - 1):
            words.append(Word.from_blocks(blocks, exps, s))
    words.sort(key=Word.sort_key)
    return words
