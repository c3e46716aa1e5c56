"""Text formats shared by the command line: quadratic irrationals
`(P+sqrt(D))/Q`, continued fractions `[a0; a1, (p1, p2)]`, matrices
`[[a,b],[c,d]]` and generator words `V T^3 U T^-1`."""

from __future__ import annotations

import re
from typing import Union

from .cf import FiniteCF, PeriodicCF
from .errors import DomainError, ParseError
from .matrix import UniModMatrix
from .quadratic import QuadraticIrrational
from .unimodular import FreeWord, GeneratorWord

_INT = re.compile(r"[+-]?\d+")
_WS = re.compile(r"\s*")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        return ParseError(message, self.text, self.pos)

    def skip(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            raise self.error(f"expected {token!r}")

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


def parse_qi(text: str) -> QuadraticIrrational:
    s = _Scanner(text)
    if s.peek("sqrt"):
        P, D, Q = 0, _sqrt(s), 1
    else:
        s.expect("(")
        P = s.integer()
        s.expect("+")
        D = _sqrt(s)
        s.expect(")")
        Q = s.integer() if s.accept("/") else 1
    s.end()
    return QuadraticIrrational(P, D, Q)


def _sqrt(s: _Scanner) -> int:
    s.expect("sqrt")
    s.expect("(")
    D = s.integer()
    s.expect(")")
    return D


def format_qi(x: QuadraticIrrational) -> str:
    return f"({x.P}+sqrt({x.D}))/{x.Q}"


def parse_cf(text: str) -> Union[PeriodicCF, FiniteCF]:
    """`[a0; a1, ..., (p1, ..., pk)]`; `[; (p1, ...)]` or `[(p1, ...)]` when
    the period starts at a0; no parenthesized group for a finite CF."""
    s = _Scanner(text)
    s.expect("[")
    pre = []
    period = None
    if s.peek("(") or s.peek(";"):
        s.accept(";")
    elif not s.peek("]"):
        pre.append(s.integer())
        if s.accept(";"):
            pass
        elif not s.peek("]"):
            raise s.error("expected ';' after the first term")
    while not s.peek("]"):
        if s.accept("("):
            period = [s.integer()]
            while s.accept(","):
                period.append(s.integer())
            s.expect(")")
            break
        pre.append(s.integer())
        if not s.accept(","):
            break
    s.expect("]")
    s.end()
    if period is None:
        if not pre:
            raise s.error("empty continued fraction")
        return FiniteCF(tuple(pre))
    return PeriodicCF(tuple(pre), tuple(period))


def format_cf(cf: Union[PeriodicCF, FiniteCF]) -> str:
    if isinstance(cf, FiniteCF):
        head, rest = cf.terms[0], cf.terms[1:]
        return f"[{head}" + ("; " + ", ".join(map(str, rest)) if rest else "") + "]"
    period = "(" + ", ".join(map(str, cf.period)) + ")"
    if not cf.preperiod:
        return f"[; {period}]"
    head, rest = cf.preperiod[0], cf.preperiod[1:]
    return f"[{head}; " + "".join(f"{t}, " for t in rest) + period + "]"


def parse_matrix(text: str) -> UniModMatrix:
    s = _Scanner(text)
    s.expect("[")
    s.expect("[")
    a = s.integer()
    s.expect(",")
    b = s.integer()
    s.expect("]")
    s.expect(",")
    s.expect("[")
    c = s.integer()
    s.expect(",")
    d = s.integer()
    s.expect("]")
    s.expect("]")
    s.end()
    return UniModMatrix(a, b, c, d)


def format_matrix(M: UniModMatrix) -> str:
    return f"[[{M.a},{M.b}],[{M.c},{M.d}]]"


_TOKEN = re.compile(r"T(?:\^([+-]?\d+))?|U|V")


def parse_word(text: str) -> FreeWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.fullmatch(m.group())
        if not tok:
            raise ParseError(f"bad word token {m.group()!r}", text, m.start())
        name = m.group()[0]
        k = int(tok.group(1)) if name == "T" and tok.group(1) is not None else 1
        letters.append((name, k))
    return FreeWord(tuple(letters))


def format_word(w: Union[FreeWord, GeneratorWord]) -> str:
    if isinstance(w, GeneratorWord):
        w = w.to_free()
    return " ".join(f"T^{k}" if name == "T" else name for name, k in w.letters)


def parse_generator_word(text: str) -> GeneratorWord:
    """Strict parse of a word already in normal form."""
    letters = parse_word(text).letters
    e = 0
    if letters and letters[0][0] == "V":
        e, letters = 1, letters[1:]
    exps = []
    expect_t = True
    for i, (name, k) in enumerate(letters):
        if expect_t != (name == "T"):
            raise ParseError("word is not in V^e T^a0 U T^a1 ... form", text, 0)
        if name == "T":
            exps.append(k)
        expect_t = not expect_t
    if expect_t:
        raise ParseError("word must end with a T block", text, len(text))
    try:
        return GeneratorWord(e, tuple(exps))
    except DomainError as exc:
        raise ParseError(str(exc), text, 0) from None
