"""PGL2(Z): generator words, the continued-fraction decomposition of a
unimodular matrix, word normal forms and the equivalence decider."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .cf import ConvergentTable, PeriodicCF, expand, invert, rational_expansions, tail_match, translate
from .errors import DomainError
from .matrix import UniModMatrix
from .quadratic import QuadraticIrrational, qi_equal, qi_mobius

__all__ = [
    "UniModMatrix", "FreeWord", "GeneratorWord", "Decomposition", "Translation",
    "RELATORS", "normalize_sign", "word_to_matrix", "decompose", "normal_form",
    "reduce_word", "relator_selftest", "serret_equivalent", "equivalence_chain",
    "convergent_matrix",
]

T = UniModMatrix(1, 1, 0, 1)
U = UniModMatrix(0, 1, 1, 0)
V = UniModMatrix(-1, 0, 0, 1)


def _t_power(k: int) -> UniModMatrix:
    return UniModMatrix(1, k, 0, 1)


@dataclass(frozen=True)
class FreeWord:
    """Unreduced word in T^k, U, V. Letters are ("T", k), ("U", 1), ("V", 1)."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        letters = []
        for name, k in self.letters:
            if name not in ("T", "U", "V") or (name != "T" and k != 1):
                raise DomainError(f"bad letter {name}^{k}")
            letters.append((name, int(k)))
        object.__setattr__(self, "letters", tuple(letters))

    def __add__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def __mul__(self, n: int) -> FreeWord:
        return FreeWord(self.letters * n)

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class GeneratorWord:
    """V^e T^a0 U T^a1 U ... U T^an, interior exponents >= 1, e = 1 only if n = 0."""

    e: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if self.e not in (0, 1):
            raise DomainError(f"e must be 0 or 1, got {self.e}")
        if not exps:
            raise DomainError("a generator word needs at least one exponent")
        if self.e == 1 and len(exps) > 1:
            raise DomainError("V may only appear in words with a single T block")
        if any(a < 1 for a in exps[1:-1]):
            raise DomainError(f"interior exponents must be >= 1: {list(exps)}")

    def to_free(self) -> FreeWord:
        letters = [("V", 1)] * self.e
        for i, a in enumerate(self.exponents):
            if i:
                letters.append(("U", 1))
            letters.append(("T", a))
        return FreeWord(tuple(letters))


class Decomposition(NamedTuple):
    """M acts as x -> [terms..., x + r]."""

    terms: tuple[int, ...]
    r: int


class Translation(NamedTuple):
    """M acts as x -> sign * x + shift."""

    sign: int
    shift: int


def normalize_sign(M: UniModMatrix) -> UniModMatrix:
    return M.canonical()


def word_to_matrix(w: Union[FreeWord, GeneratorWord]) -> UniModMatrix:
    if isinstance(w, GeneratorWord):
        w = w.to_free()
    M = UniModMatrix.identity()
    for name, k in w.letters:
        M = M @ (_t_power(k) if name == "T" else U if name == "U" else V)
    return M.canonical()


def convergent_matrix(terms) -> UniModMatrix:
    """Matrix of x -> [terms..., x], i.e. [[p_{n-1}, p_{n-2}], [q_{n-1}, q_{n-2}]]."""
    return UniModMatrix(*ConvergentTable(terms).matrix(len(terms) - 1))


def decompose(M: UniModMatrix) -> Union[Decomposition, Translation]:
    if not M.is_canonical():
        raise DomainError(f"matrix {M.entries} is not sign-normalized")
    a, b, c, d = M.entries
    if c == 0:
        return Translation(a, b)
    det = M.det
    for expansion in rational_expansions(a, c):
        n = len(expansion)
        if (-1) ** n == det:
            break
    P = convergent_matrix(expansion.terms)
    # M = P * T^r: both have first column (a, c) and the same determinant
    rest = P.inverse() @ M
    if P.entries[0] != a or P.entries[2] != c:
        rest = UniModMatrix(*(-v for v in rest.entries))
    assert rest.a == 1 and rest.c == 0 and rest.d == 1, rest
    return Decomposition(expansion.terms, rest.b)


def normal_form(M: UniModMatrix) -> GeneratorWord:
    dec = decompose(M.canonical())
    if isinstance(dec, Translation):
        if dec.sign == 1:
            return GeneratorWord(0, (dec.shift,))
        # -x + b = v(x - b)
        return GeneratorWord(1, (-dec.shift,))
    return GeneratorWord(0, dec.terms + (dec.r,))


def reduce_word(w: FreeWord) -> GeneratorWord:
    return normal_form(word_to_matrix(w))


def _w(*letters) -> FreeWord:
    out = []
    for x in letters:
        out.append(("T", x) if isinstance(x, int) else (x, 1))
    return FreeWord(tuple(out))


RELATORS: dict[str, FreeWord] = {
    "U^2": _w("U") * 2,
    "V^2": _w("V") * 2,
    "(TV)^2": _w(1, "V") * 2,
    "(UV)^2": _w("U", "V") * 2,
    "(TUV)^3": _w(1, "U", "V") * 3,
    # UV = T^-1 U T U T^-1, written as (UV)^-1 T^-1 U T U T^-1
    "VU T^-1 U T U T^-1": _w("V", "U", -1, "U", 1, "U", -1),
    "(UTUT^-2)^2": _w("U", 1, "U", -2) * 2,
    "(UTUT^-1)^3": _w("U", 1, "U", -1) * 3,
}


def relator_selftest() -> dict[str, bool]:
    identity = UniModMatrix.identity()
    return {name: word_to_matrix(w) == identity for name, w in RELATORS.items()}


def serret_equivalent(x: QuadraticIrrational, y: QuadraticIrrational) -> Optional[UniModMatrix]:
    """A matrix M with M.x == y if x and y share a complete quotient, else None."""
    cx, cy = expand(x), expand(y)
    match = tail_match(cx, cy)
    if match is None:
        return None
    i, j = match
    Mx = convergent_matrix(cx.terms(i))
    My = convergent_matrix(cy.terms(j))
    M = (My @ Mx.inverse()).canonical()
    assert qi_equal(qi_mobius(M, x), y)
    return M


def equivalence_chain(M: UniModMatrix, x: QuadraticIrrational) -> list[PeriodicCF]:
    """Continued fractions from y = M.x down to x, each step sharing a tail
    with the previous one: y = [a0, ..., a_{n-1}, x + r] is peeled one
    partial quotient at a time, then shifted by -r."""
    M = M.canonical()
    if M.c <= 0:
        raise DomainError("equivalence_chain needs c > 0; use decompose for translations")
    terms, r = decompose(M)
    cf = expand(qi_mobius(M, x))
    chain = [cf]
    for a in terms:
        # the next entry is 1/(z - a); a need not be the floor of z
        cf = invert(translate(cf, -a))
        chain.append(cf)
    if r:
        chain.append(translate(cf, -r))
    return chain
