"""Exact continued fractions of quadratic irrationals and the PGL2(Z)
equivalence they detect."""

from .cf import (
    ConvergentTable, FiniteCF, PeriodicCF, convergents, expand, head_peel, invert,
    negate, rational_expansions, tail_match, translate, value,
)
from .errors import DomainError, ParseError
from .matrix import UniModMatrix
from .quadratic import QuadraticIrrational, is_perfect_square, isqrt, qi_equal, qi_floor, qi_mobius
from .unimodular import (
    Decomposition, FreeWord, GeneratorWord, Translation, decompose, equivalence_chain,
    normal_form, normalize_sign, reduce_word, relator_selftest, serret_equivalent,
    word_to_matrix,
)

__version__ = "0.1.0"
