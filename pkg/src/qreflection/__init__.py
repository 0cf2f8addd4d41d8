"""Exact fusion rules, characters and Haagerup multiplier coefficients of the
quantum reflection groups H_N^{s+}."""

from .chebyshev import (
    IntPolynomial,
    QuadraticInteger,
    cheb_a_eval_float,
    cheb_a_eval_quadint,
    cheb_a_poly,
    decay_ratio,
    fit_decay_constant,
    pi_poly,
    trig_ratio_check,
)
from .characters import (
    CharacterImage,
    InvalidWordError,
    char_image_poly,
    dimension,
    verify_char_homomorphism,
    verify_dim_consistency,
)
from .fusion import RepSum, multiplicity_of_trivial, tensor, tensor_sn_plus
from .haagerup import (
    CoefficientQuery,
    DecayProfile,
    QueryRangeError,
    coefficient,
    convergence_sweep,
    fit_exponential_bound,
    n4_shell_profile,
    shell_max_profile,
)
from .words import (
    SMembership,
    Word,
    WordSyntaxError,
    conjugate,
    enumerate_ball,
    is_valid_S,
    length_L,
    normalize,
    parse_word,
)

__version__ = "0.1.0"
