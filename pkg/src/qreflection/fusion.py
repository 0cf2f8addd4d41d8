"""Tensor-product decomposition of irreducible corepresentations of H_N^{s+}.

The recursion on words is

    v a z^i  (x)  z^j a w  =  v a z^{i+j} a w  (+)  [i + j = 0 mod s] (v (x) w)

with base case plain monoid concatenation once either side has no letter ``a``.
For s = 1 this reproduces the SO(3)-type rule of S_N^+, see ``tensor_sn_plus``.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from typing import Iterator, Mapping

from .words import Word, concat, conjugate, normalize, unit

__all__ = [
    "RepSum",
    "tensor",
    "tensor_sn_plus",
    "multiplicity_of_trivial",
    "conjugate_repsum",
]


class RepSum:
    """Finite direct sum of irreducibles, ``Word -> multiplicity``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None) -> None:
        clean = {w: int(m) for w, m in (terms or {}).items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError("multiplicities must be nonnegative")
        if len({w.s for w in clean}) > 1:
            raise ValueError("all words in a RepSum must share the same s")
        self._terms: dict[Word, int] = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key()))

    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"RepSum({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # descending order reads like the usual a^4 + a^2 + 1
        parts = [str(w) if m == 1 else f"{m}*{w}" for w, m in reversed(self._terms.items())]
        return " + ".join(parts)

    def max_multiplicity(self) -> int:
        return max(self._terms.values(), default=0)

    def to_dict(self) -> dict:
        return {"terms": [{"word": str(w), "mult": m} for w, m in self._terms.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _split_right(alpha: Word) -> tuple[Word, int]:
    """alpha = v . a . z^i  ->  (v, i)."""
    syl = alpha.syllables
    i, last = syl[-1], syl[-2]
    head = syl[:-2] + ((last - 1, 0) if last > 1 else ())
    return Word(alpha.s, head), i


def _split_left(beta: Word) -> tuple[int, Word]:
    """beta = z^j . a . w  ->  (j, w)."""
    syl = beta.syllables
    j, first = syl[0], syl[1]
    rest = ((0, first - 1) if first > 1 else ()) + syl[2:]
    return j, Word(beta.s, rest)


@lru_cache(maxsize=200_000)
def _tensor(alpha: Word, beta: Word) -> tuple[tuple[Word, int], ...]:
    if not alpha.has_a() or not beta.has_a():
        return ((concat(alpha, beta), 1),)
    s = alpha.s
    v, i = _split_right(alpha)
    j, w = _split_left(beta)
    out: Counter[Word] = Counter()
    middle = normalize([("a", 1), ("z", i + j), ("a", 1)], s)
    out[concat(concat(v, middle), w)] += 1
    if (i + j) % s == 0:
        for gamma, m in _tensor(v, w):
            out[gamma] += m
    return tuple(out.items())


def tensor(alpha: Word, beta: Word) -> RepSum:
    """Decompose ``alpha (x) beta`` into irreducibles."""
    if alpha.s != beta.s:
        raise ValueError(f"mismatched s: {alpha.s} vs {beta.s}")
    return RepSum(dict(_tensor(alpha, beta)))


def tensor_sn_plus(t1: int, t2: int) -> set[int]:
    """SO(3)-type rule for S_N^+: v^(t1) (x) v^(t2) = sum_{k=0}^{2 min} v^(t1+t2-k)."""
    if t1 < 0 or t2 < 0:
        raise ValueError("labels must be nonnegative")
    return {t1 + t2 - k for k in range(2 * min(t1, t2) + 1)}


def multiplicity_of_trivial(alpha: Word, beta: Word) -> int:
    return tensor(alpha, beta)[unit(alpha.s)]


def conjugate_repsum(rs: RepSum) -> RepSum:
    return RepSum({conjugate(w): m for w, m in rs})

