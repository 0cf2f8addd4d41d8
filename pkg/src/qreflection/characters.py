"""Character images in C(S_N^+) and exact dimensions of irreducibles.

For ``alpha = a^{l_1} z^{j_1} ... a^{l_k}`` the image of its character is the
polynomial P_alpha with ``P_alpha(X^2) = prod_i A_{l_i}(X)``.  We store the
right-hand side, ``Q_alpha(X)``; evaluating it at sqrt(N) gives the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chebyshev import IntPolynomial, QuadraticInteger, cheb_a_eval_quadint, cheb_a_poly
from .fusion import tensor
from .words import SMembership, Word, is_valid_S, length_L

__all__ = [
    "CharacterImage",
    "InvalidWordError",
    "require_s_word",
    "char_image_poly",
    "dimension",
    "verify_dim_consistency",
    "verify_char_homomorphism",
]


class InvalidWordError(ValueError):
    """Raised for words of M that do not index an irreducible (not in S)."""

    def __init__(self, word: Word) -> None:
        super().__init__(f"{word} is not an element of S (blocks {list(word.blocks)})")
        self.word = word


def require_s_word(word: Word) -> None:
    if is_valid_S(word) is SMembership.INTERMEDIATE:
        raise InvalidWordError(word)


@dataclass(frozen=True)
class CharacterImage:
    word: Word
    q_poly: IntPolynomial

    @property
    def p_poly(self) -> IntPolynomial:
        """P_alpha, i.e. Q_alpha with X^2 renamed to X (Q_alpha is even)."""
        return IntPolynomial(self.q_poly.coefficients[::2])


def char_image_poly(alpha: Word) -> CharacterImage:
    require_s_word(alpha)
    q = IntPolynomial.constant(1)
    for L in alpha.blocks:
        q = q * cheb_a_poly(L)
    return CharacterImage(alpha, q)


def dimension(alpha: Word, n: int) -> QuadraticInteger:
    """Exact dimension prod_i A_{l_i}(sqrt(n))."""
    require_s_word(alpha)
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    out = QuadraticInteger(1, 0, n)
    for L in alpha.blocks:
        out = out * cheb_a_eval_quadint(L, n)
    return out


def verify_dim_consistency(alpha: Word, beta: Word, n: int) -> bool:
    lhs = dimension(alpha, n) * dimension(beta, n)
    rhs = QuadraticInteger(0, 0, n)
    for gamma, mult in tensor(alpha, beta):
        rhs = rhs + mult * dimension(gamma, n)
    return lhs == rhs


def verify_char_homomorphism(alpha: Word, beta: Word) -> bool:
    lhs = char_image_poly(alpha).q_poly * char_image_poly(beta).q_poly
    rhs = IntPolynomial()
    for gamma, mult in tensor(alpha, beta):
        rhs = rhs + mult * char_image_poly(gamma).q_poly
    return lhs == rhs and lhs.degree == length_L(alpha) + length_L(beta)
